#include "knotoid/invariants.hpp"

namespace knotoid {

MultiPoly affine_index(const Diagram& d) {
  const auto passes = strand_passes(d);
  std::vector<char> incoming(d.dart_count(), 0);
  for (const Pass& p : passes)
    if (p.in >= 0) incoming[p.in] = 1;

  // Arc labels along the strand; the arc leaving the tail is labelled 0.
  std::vector<int> over_in(d.vertex_count(), 0), under_out(d.vertex_count(), 0);
  int label = 0;
  for (const Pass& p : passes) {
    if (p.in < 0 || p.out < 0) continue;
    const int v = d.vertex_of(p.in);
    const int j = d.slot_of(p.in);
    const bool other_from_left = incoming[d.dart(v, (j + 1) % 4)] != 0;
    const int next = label + (other_from_left ? 1 : -1);
    if (d.is_under(p.in)) {
      under_out[v] = next;
    } else {
      over_in[v] = label;
    }
    label = next;
  }

  const auto sign = crossing_signs(d);
  MultiPoly out;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (!d.is_crossing(v)) continue;
    Exponents e{};
    e[kVarT] = over_in[v] - under_out[v];
    out.add_term(e, sign[v]);
    out.add_term(Exponents{}, -sign[v]);
  }
  return out;
}

}  // namespace knotoid

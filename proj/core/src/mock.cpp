// Mock Alexander polynomial: states match crossings to unstarred regions
// through incident corners. Evaluated by a dynamic program over the set of
// regions already used.
#include <unordered_map>

#include "knotoid/invariants.hpp"
#include "laurent.hpp"

namespace knotoid {

namespace {

struct CornerWeight {
  int coef;
  int wexp;
};

// Corner between slots i and i+1, by the in/out role of both slots.
CornerWeight corner_weight(int sign, bool in_a, bool in_b) {
  if (in_a && in_b) return sign > 0 ? CornerWeight{-1, -1} : CornerWeight{-1, 1};
  if (!in_a && !in_b) return sign > 0 ? CornerWeight{1, 1} : CornerWeight{1, -1};
  return {1, 0};
}

}  // namespace

MultiPoly mock_alexander(const Diagram& d) {
  const auto face = face_of_darts(d);
  const int star = face[d.tail_dart()];
  const int nfaces = d.crossing_count() + 1;
  if (nfaces > 63) throw std::length_error("mock polynomial limited to 62 crossings");

  std::vector<char> incoming(d.dart_count(), 0);
  for (const Pass& p : strand_passes(d))
    if (p.in >= 0) incoming[p.in] = 1;
  const auto sign = crossing_signs(d);

  // Compact region numbering without the starred region.
  std::vector<int> region(nfaces, -1);
  for (int f = 0, r = 0; f < nfaces; ++f)
    if (f != star) region[f] = r++;

  struct Option {
    int region;
    CornerWeight w;
  };
  std::vector<std::vector<Option>> options;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (!d.is_crossing(v)) continue;
    std::vector<Option> opts;
    for (int i = 0; i < 4; ++i) {
      const Dart a = d.dart(v, i);
      const Dart b = d.dart(v, (i + 1) % 4);
      const int f = face[a];
      if (f == star) continue;
      opts.push_back({region[f], corner_weight(sign[v], incoming[a], incoming[b])});
    }
    options.push_back(std::move(opts));
  }

  using detail::Laurent;
  std::unordered_map<std::uint64_t, Laurent> layer{{0, Laurent::monomial(0)}};
  for (const auto& opts : options) {
    std::unordered_map<std::uint64_t, Laurent> next;
    for (const auto& [used, poly] : layer) {
      for (const Option& o : opts) {
        const std::uint64_t bitv = std::uint64_t{1} << o.region;
        if (used & bitv) continue;
        next[used | bitv].add(poly, o.w.coef, o.w.wexp);
      }
    }
    layer.swap(next);
  }
  MultiPoly out;
  for (const auto& [used, poly] : layer) out += poly.to_poly(kVarW);
  return out;
}

}  // namespace knotoid

#include <deque>

#include "canonical_internal.hpp"

namespace knotoid {

namespace detail {

Labelling bfs_labelling(const Diagram& d, int root, bool keep_parity) {
  const int n = d.vertex_count();
  Labelling l{std::vector<int>(n, -1), std::vector<int>(n, 0)};
  std::vector<int> order;
  order.reserve(n);
  l.perm[root] = 0;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    const int deg = d.degree(v);
    for (int k = 0; k < deg; ++k) {
      const int s = (l.offset[v] + k) % deg;
      const Dart m = d.mate(d.dart(v, s));
      const int w = d.vertex_of(m);
      if (l.perm[w] >= 0) continue;
      l.perm[w] = static_cast<int>(order.size());
      order.push_back(w);
      if (d.is_crossing(w)) {
        const int j = d.slot_of(m);
        l.offset[w] = (keep_parity && j % 2 == 1) ? (j + 1) % 4 : j;
      }
    }
  }
  return l;
}

std::string em_under(const Diagram& d, const Labelling& l) {
  const int n = d.vertex_count();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[l.perm[v]] = v;
  std::string out;
  out.reserve(static_cast<std::size_t>(d.dart_count()) * 2 + n);
  for (int nv = 0; nv < n; ++nv) {
    if (nv) out += ',';
    const int v = inv[nv];
    const int deg = d.degree(v);
    for (int k = 0; k < deg; ++k) {
      const int s = (l.offset[v] + k) % deg;
      const Dart m = d.mate(d.dart(v, s));
      const int w = d.vertex_of(m);
      const int wdeg = d.degree(w);
      const int ns = (d.slot_of(m) - l.offset[w] + wdeg) % wdeg;
      const int lw = l.perm[w];
      out += lw < 26 ? static_cast<char>('A' + lw) : static_cast<char>('a' + lw - 26);
      out += static_cast<char>('0' + ns);
    }
  }
  return out;
}

}  // namespace detail

Diagram canonical_form(const Diagram& d) {
  const auto l = detail::bfs_labelling(d, d.tail(), true);
  return relabel(d, l.perm, l.offset);
}

CanonicalCode canonical_code(const Diagram& d) {
  if (d.vertex_count() > 52) throw std::length_error("EM codes support at most 52 vertices");
  return detail::em_under(d, detail::bfs_labelling(d, d.tail(), true));
}

}  // namespace knotoid

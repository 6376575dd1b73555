// Yamada polynomial through its loop expansion.
//
// Each edge is a band (kept: weight -d, deleted: weight 1), each vertex a disk
// of weight -1/d, and each boundary circle of the resulting surface weighs d,
// where d = a + 1/a and A = a^2. A crossing expands into a 4-valent vertex
// (weight 1), its A-smoothing (weight A) or its B-smoothing (weight 1/A); a
// smoothing leaves two 2-valent disks. Summing over all choices gives the
// Yamada polynomial. The sum is contracted one vertex at a time, keeping for
// every non-crossing matching of the open band ends its accumulated weight.
#include <deque>
#include <map>
#include <unordered_map>

#include "knotoid/invariants.hpp"
#include "laurent.hpp"

namespace knotoid {

namespace {

using detail::Laurent;

// Weight as a polynomial in a, graded by the power of d.
struct Weight {
  std::map<int, Laurent> by_delta;

  void add(const Weight& o, int sign, int ashift, int dshift) {
    for (const auto& [k, poly] : o.by_delta) by_delta[k + dshift].add(poly, sign, ashift);
  }
};

struct LocalOption {
  int sign;
  int aexp;
  int dexp;
  std::vector<std::pair<int, int>> pairs;  // over local point indices 0..2*deg-1
};

// Local point indices: slot s has left point 2s and right point 2s+1.
std::vector<LocalOption> site_options(bool crossing, int deg) {
  auto around = [&](std::vector<std::pair<int, int>>& pairs, const std::vector<int>& slots) {
    const int k = static_cast<int>(slots.size());
    for (int i = 0; i < k; ++i) pairs.emplace_back(2 * slots[i], 2 * slots[(i + 1) % k] + 1);
  };
  std::vector<LocalOption> out;
  LocalOption vertex{-1, 0, -1, {}};
  std::vector<int> all(deg);
  for (int i = 0; i < deg; ++i) all[i] = i;
  around(vertex.pairs, all);
  out.push_back(vertex);
  if (crossing) {
    LocalOption a{1, 2, -2, {}};
    around(a.pairs, {0, 1});
    around(a.pairs, {2, 3});
    LocalOption b{1, -2, -2, {}};
    around(b.pairs, {1, 2});
    around(b.pairs, {3, 0});
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

}  // namespace

MultiPoly yamada_raw(const SpatialGraph& g) {
  const int nv = g.vertex_count();
  if (nv == 0) return MultiPoly(1);

  // Breadth-first vertex order keeps the open boundary short.
  std::vector<int> order, rank(nv, -1);
  for (int root = 0; root < nv; ++root) {
    if (rank[root] >= 0) continue;
    std::deque<int> q{root};
    rank[root] = static_cast<int>(order.size());
    order.push_back(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      for (int x = g.base[v]; x < g.base[v + 1]; ++x) {
        const int w = g.owner(g.mate[x]);
        if (rank[w] >= 0) continue;
        rank[w] = static_cast<int>(order.size());
        order.push_back(w);
        q.push_back(w);
      }
    }
  }

  std::vector<int> open;  // global point ids, point = 2*dart + side
  std::unordered_map<std::string, Weight> states;
  states[""].by_delta[0] = Laurent::monomial(0);

  for (int v : order) {
    const int deg = g.degree(v);
    const int b0 = g.base[v];
    // Edges closed at this step, as (dart here, mate dart).
    std::vector<std::pair<int, int>> closing;
    for (int s = 0; s < deg; ++s) {
      const int x = b0 + s;
      const int m = g.mate[x];
      const int w = g.owner(m);
      if (w == v) {
        if (x < m) closing.emplace_back(x, m);
      } else if (rank[w] < rank[v]) {
        closing.emplace_back(x, m);
      }
    }

    // Position of every point in the working array.
    const int old_n = static_cast<int>(open.size());
    std::unordered_map<int, int> pos;
    for (int i = 0; i < old_n; ++i) pos[open[i]] = i;
    for (int p = 0; p < 2 * deg; ++p) pos[2 * b0 + p] = old_n + p;

    std::vector<int> next_open;
    std::vector<char> dropped(old_n + 2 * deg, 0);
    for (const auto& [x, m] : closing) {
      for (int side = 0; side < 2; ++side) {
        dropped[pos.at(2 * x + side)] = 1;
        dropped[pos.at(2 * m + side)] = 1;
      }
    }
    std::vector<int> keep_positions;
    for (int i = 0; i < old_n + 2 * deg; ++i) {
      if (dropped[i]) continue;
      keep_positions.push_back(i);
      next_open.push_back(i < old_n ? open[i] : 2 * b0 + (i - old_n));
    }
    if (keep_positions.size() > 255) throw std::length_error("Yamada frontier too wide");
    std::vector<int> new_index(old_n + 2 * deg, -1);
    for (std::size_t k = 0; k < keep_positions.size(); ++k) new_index[keep_positions[k]] = static_cast<int>(k);

    const auto options = site_options(g.crossing[v] != 0, deg);
    const int ne = static_cast<int>(closing.size());
    std::unordered_map<std::string, Weight> next;
    std::vector<int> partner(old_n + 2 * deg);

    for (const auto& [key, weight] : states) {
      for (const LocalOption& opt : options) {
        for (int mask = 0; mask < (1 << ne); ++mask) {
          for (int i = 0; i < old_n; ++i) partner[i] = static_cast<unsigned char>(key[i]);
          for (const auto& [p, q] : opt.pairs) {
            partner[old_n + p] = old_n + q;
            partner[old_n + q] = old_n + p;
          }
          int loops = 0, sign = opt.sign, dexp = opt.dexp;
          auto join = [&](int x, int y) {
            const int px = partner[x], py = partner[y];
            if (px == y) {
              ++loops;
            } else {
              partner[px] = py;
              partner[py] = px;
            }
          };
          for (int e = 0; e < ne; ++e) {
            const int x = closing[e].first, m = closing[e].second;
            const int xl = pos.at(2 * x), xr = pos.at(2 * x + 1);
            const int ml = pos.at(2 * m), mr = pos.at(2 * m + 1);
            if ((mask >> e) & 1) {
              sign = -sign;
              ++dexp;
              join(xl, mr);
              join(xr, ml);
            } else {
              join(xl, xr);
              join(ml, mr);
            }
          }
          std::string nkey(keep_positions.size(), '\0');
          for (std::size_t k = 0; k < keep_positions.size(); ++k)
            nkey[k] = static_cast<char>(new_index[partner[keep_positions[k]]]);
          next[nkey].add(weight, sign, opt.aexp, dexp + loops);
        }
      }
    }
    states.swap(next);
    open.swap(next_open);
  }

  // Expand powers of d = a + 1/a and pass from a to A = a^2.
  Laurent total;
  const Laurent delta{-1, {1, 0, 1}};
  for (const auto& [k, poly] : states[""].by_delta) {
    if (poly.is_zero()) continue;
    if (k < 0) throw std::logic_error("negative loop-weight exponent in Yamada expansion");
    Laurent term = poly;
    for (int i = 0; i < k; ++i) term = term.times(delta);
    total.add(term);
  }
  total.trim();
  MultiPoly out;
  for (std::size_t i = 0; i < total.coef.size(); ++i) {
    if (total.coef[i] == 0) continue;
    const int e = total.lo + static_cast<int>(i);
    if (e % 2 != 0) throw std::logic_error("odd power of a in Yamada expansion");
    Exponents ex{};
    ex[kVarA] = e / 2;
    out.add_term(ex, mpz_class(static_cast<long>(total.coef[i])));
  }
  return out;
}

MultiPoly unit_normalize_yamada(const MultiPoly& p) {
  if (p.is_zero()) return p;
  const int m = p.min_degree(kVarA);
  MultiPoly out = p.shifted(kVarA, -m);
  return (m % 2 == 0) ? out : -out;
}

MultiPoly yamada_closure(const Diagram& d) { return unit_normalize_yamada(yamada_raw(close_theta(d))); }

}  // namespace knotoid

// Bracket and arrow state sums over all 2^n smoothings.
#include <map>
#include <stdexcept>
#include <tuple>

#include "knotoid/invariants.hpp"
#include "laurent.hpp"

namespace knotoid {

namespace {

using detail::Laurent;

struct Smoother {
  const Diagram& d;
  std::vector<int> bit;        // crossing vertex -> bit index
  std::vector<char> incoming;  // per dart: strand enters the vertex here
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;

  explicit Smoother(const Diagram& dd) : d(dd), bit(dd.vertex_count(), -1), incoming(dd.dart_count(), 0),
                                          stamp(dd.dart_count(), 0) {
    int b = 0;
    for (int v = 0; v < d.vertex_count(); ++v)
      if (d.is_crossing(v)) bit[v] = b++;
    if (b > 40) throw std::length_error("state sum limited to 40 crossings");
    for (const Pass& p : strand_passes(d))
      if (p.in >= 0) incoming[p.in] = 1;
  }

  static int partner(int slot, bool b_smoothing) {
    if (!b_smoothing) return slot ^ 1;
    return (slot % 2 == 1) ? (slot + 1) % 4 : (slot + 3) % 4;
  }

  // Walks one component starting by leaving along `start`. Returns the
  // number of surviving cusps after cancellation (only when track_cusps).
  int walk(Dart start, std::uint64_t mask, bool closed, bool track_cusps) {
    std::string stack;
    Dart cur = start;
    while (true) {
      const Dart m = d.mate(cur);
      stamp[cur] = epoch;
      stamp[m] = epoch;
      const int v = d.vertex_of(m);
      if (!d.is_crossing(v)) break;
      const int j = d.slot_of(m);
      const int k = partner(j, (mask >> bit[v]) & 1);
      const Dart out = d.dart(v, k);
      if (track_cusps && incoming[m] == incoming[out]) {
        const char side = ((k - j + 4) % 4 == 1) ? 'L' : 'R';
        if (!stack.empty() && stack.back() == side) {
          stack.pop_back();
        } else {
          stack.push_back(side);
        }
      }
      cur = out;
      if (closed && cur == start) break;
    }
    if (closed) {
      std::size_t a = 0, b = stack.size();
      while (b - a >= 2 && stack[a] == stack[b - 1]) {
        ++a;
        --b;
      }
      return static_cast<int>(b - a);
    }
    return static_cast<int>(stack.size());
  }

  // Calls f(b_count, loops, open_cusps) for each state.
  template <class F>
  void for_each_state(bool track_cusps, F&& f) {
    const int n = d.crossing_count();
    const std::uint64_t states = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < states; ++mask) {
      ++epoch;
      const int open = walk(d.tail_dart(), mask, false, track_cusps);
      int loops = 0;
      for (Dart x = 0; x < d.dart_count(); ++x) {
        if (stamp[x] == epoch || !d.is_crossing(d.vertex_of(x))) continue;
        const int left = walk(x, mask, true, track_cusps);
        if (left != 0) throw std::logic_error("closed loop kept cusps");
        ++loops;
      }
      f(__builtin_popcountll(mask), loops, open);
    }
  }
};

Laurent delta_power(int k) {
  Laurent r = Laurent::monomial(0);
  const Laurent delta{-2, {-1, 0, 0, 0, -1}};
  for (int i = 0; i < k; ++i) r = r.times(delta);
  return r;
}

// counts[(b, loops)] -> Laurent sum of A^{n-2b} delta^loops.
Laurent collect(const std::map<std::pair<int, int>, std::int64_t>& counts, int n) {
  Laurent out;
  std::map<int, Laurent> by_loops;
  for (const auto& [key, c] : counts) {
    const auto [b, loops] = key;
    by_loops[loops].add(Laurent::monomial(n - 2 * b, c));
  }
  for (const auto& [loops, poly] : by_loops) out.add(poly.times(delta_power(loops)));
  out.trim();
  return out;
}

}  // namespace

MultiPoly bracket_writhe_normalized(const Diagram& d) {
  Smoother s(d);
  std::map<std::pair<int, int>, std::int64_t> counts;
  s.for_each_state(false, [&](int b, int loops, int) { ++counts[{b, loops}]; });
  Laurent raw = collect(counts, d.crossing_count());
  return raw.times(detail::minus_a3_power(-writhe(d))).to_poly(kVarA);
}

MultiPoly unit_normalize_bracket(const MultiPoly& p) {
  if (p.is_zero()) return p;
  const int m = p.min_degree(kVarA);
  const int k = -((m >= 0) ? m / 3 : -((-m + 2) / 3));
  MultiPoly out = p.shifted(kVarA, 3 * k);
  return (k % 2 == 0) ? out : -out;
}

MultiPoly bracket(const Diagram& d) { return unit_normalize_bracket(bracket_writhe_normalized(d)); }

MultiPoly arrow(const Diagram& d) {
  Smoother s(d);
  std::map<int, std::map<std::pair<int, int>, std::int64_t>> counts;  // by Lambda index
  s.for_each_state(true, [&](int b, int loops, int cusps) {
    if (cusps % 2 != 0) throw std::logic_error("odd cusp count on the open component");
    ++counts[cusps / 2][{b, loops}];
  });
  const Laurent unit = detail::minus_a3_power(-writhe(d));
  MultiPoly out;
  for (const auto& [lambda, c] : counts) {
    if (lambda > kLambdaCount) throw std::length_error("Lambda index beyond supported range");
    Exponents extra{};
    if (lambda > 0) extra[lambda_var(lambda)] = 1;
    out += collect(c, d.crossing_count()).times(unit).to_poly(kVarA, extra);
  }
  return out;
}

}  // namespace knotoid

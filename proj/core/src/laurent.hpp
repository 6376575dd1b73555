#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "knotoid/poly.hpp"

namespace knotoid::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

// Dense single-variable Laurent polynomial with overflow-checked int64
// coefficients; coef[i] belongs to exponent lo + i.
struct Laurent {
  int lo = 0;
  std::vector<std::int64_t> coef;

  static Laurent monomial(int e, std::int64_t c = 1) { return Laurent{e, {c}}; }
  bool is_zero() const {
    return std::all_of(coef.begin(), coef.end(), [](std::int64_t c) { return c == 0; });
  }
  int hi() const { return lo + static_cast<int>(coef.size()) - 1; }

  void add(const Laurent& o, std::int64_t scale = 1, int shift = 0) {
    if (o.coef.empty()) return;
    const int olo = o.lo + shift;
    if (coef.empty()) {
      lo = olo;
      coef.assign(o.coef.size(), 0);
    }
    const int nlo = std::min(lo, olo);
    const int nhi = std::max(hi(), olo + static_cast<int>(o.coef.size()) - 1);
    if (nlo != lo || nhi != hi()) {
      std::vector<std::int64_t> grown(nhi - nlo + 1, 0);
      std::copy(coef.begin(), coef.end(), grown.begin() + (lo - nlo));
      coef.swap(grown);
      lo = nlo;
    }
    for (std::size_t i = 0; i < o.coef.size(); ++i) {
      if (o.coef[i] == 0) continue;
      auto& slot = coef[olo - lo + i];
      slot = checked_add(slot, checked_mul(o.coef[i], scale));
    }
  }

  Laurent times(const Laurent& o) const {
    Laurent r;
    if (coef.empty() || o.coef.empty()) return r;
    r.lo = lo + o.lo;
    r.coef.assign(coef.size() + o.coef.size() - 1, 0);
    for (std::size_t i = 0; i < coef.size(); ++i) {
      if (coef[i] == 0) continue;
      for (std::size_t j = 0; j < o.coef.size(); ++j)
        r.coef[i + j] = checked_add(r.coef[i + j], checked_mul(coef[i], o.coef[j]));
    }
    return r;
  }

  void trim() {
    std::size_t a = 0, b = coef.size();
    while (a < b && coef[a] == 0) ++a;
    while (b > a && coef[b - 1] == 0) --b;
    coef = std::vector<std::int64_t>(coef.begin() + a, coef.begin() + b);
    lo += static_cast<int>(a);
    if (coef.empty()) lo = 0;
  }

  MultiPoly to_poly(int var, const Exponents& extra = {}) const {
    MultiPoly p;
    for (std::size_t i = 0; i < coef.size(); ++i) {
      if (coef[i] == 0) continue;
      Exponents e = extra;
      e[var] += lo + static_cast<int>(i);
      p.add_term(e, mpz_class(static_cast<long>(coef[i])));
    }
    return p;
  }
};

// (-A^3)^k as a Laurent polynomial in A.
inline Laurent minus_a3_power(int k) { return Laurent::monomial(3 * k, (k % 2 == 0) ? 1 : -1); }

}  // namespace knotoid::detail

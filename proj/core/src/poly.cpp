#include <algorithm>
#include <climits>

#include "knotoid/poly.hpp"

namespace knotoid {

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const mpz_class& c) {
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::variable(int var, int power) {
  Exponents e{};
  e[var] = power;
  return monomial(e);
}

void MultiPoly::add_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::substitute_A_inverse() const {
  MultiPoly out;
  for (const auto& [key, c] : terms_) {
    Exponents e = key;
    e[kVarA] = -e[kVarA];
    out.add_term(e, c);
  }
  return out;
}

MultiPoly MultiPoly::lambdas_to_one() const {
  MultiPoly out;
  for (const auto& [key, c] : terms_) {
    Exponents e = key;
    for (int i = 1; i <= kLambdaCount; ++i) e[lambda_var(i)] = 0;
    out.add_term(e, c);
  }
  return out;
}

MultiPoly MultiPoly::shifted(int var, int k) const {
  MultiPoly out;
  for (const auto& [key, c] : terms_) {
    Exponents e = key;
    e[var] += k;
    out.terms_.emplace(e, c);
  }
  return out;
}

int MultiPoly::min_degree(int var) const {
  int m = INT_MAX;
  for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
  return terms_.empty() ? 0 : m;
}

int MultiPoly::max_degree(int var) const {
  int m = INT_MIN;
  for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
  return terms_.empty() ? 0 : m;
}

int MultiPoly::lambda_degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 1; i <= kLambdaCount; ++i) s += e[lambda_var(i)];
    best = std::max(best, s);
  }
  return best;
}

}  // namespace knotoid

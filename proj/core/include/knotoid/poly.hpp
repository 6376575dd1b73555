#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "knotoid/errors.hpp"

namespace knotoid {

// Variable slots: A, t, w, then Lambda_1 .. Lambda_9.
inline constexpr int kVarA = 0;
inline constexpr int kVarT = 1;
inline constexpr int kVarW = 2;
inline constexpr int kLambdaCount = 9;
inline constexpr int kVarCount = 3 + kLambdaCount;
constexpr int lambda_var(int i) { return 2 + i; }  // i >= 1

using Exponents = std::array<int, kVarCount>;

// Exact multivariate Laurent polynomial with integer coefficients.
class MultiPoly {
 public:
  // Terms are kept in descending lexicographic exponent order.
  using TermMap = std::map<Exponents, mpz_class, std::greater<Exponents>>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor): constants read naturally
  static MultiPoly monomial(const Exponents& e, const mpz_class& c = 1);
  static MultiPoly variable(int var, int power = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const mpz_class& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  // A^k -> A^-k; other variables untouched.
  MultiPoly substitute_A_inverse() const;
  // Every Lambda_i -> 1.
  MultiPoly lambdas_to_one() const;
  // Multiplies by the monomial var^k.
  MultiPoly shifted(int var, int k) const;

  int min_degree(int var) const;
  int max_degree(int var) const;
  // Largest sum of Lambda exponents over all terms.
  int lambda_degree() const;

 private:
  TermMap terms_;
};

MultiPoly parse_poly(std::string_view text);
std::string print_poly(const MultiPoly& p);

}  // namespace knotoid

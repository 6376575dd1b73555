#include <cctype>

#include "knotoid/poly.hpp"

namespace knotoid {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  MultiPoly parse() {
    MultiPoly out;
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw SyntaxError(pos_, "expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      out.add_term(e, sign * c);
    }
    return out;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw SyntaxError(pos_, "expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  int small_int() {
    const std::string d = digits();
    if (d.size() > 6) throw SyntaxError(pos_, "exponent too large");
    return std::stoi(d);
  }

  int exponent() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
    ++pos_;
    skip();
    const bool braced = pos_ < s_.size() && s_[pos_] == '{';
    if (braced) {
      ++pos_;
      skip();
    }
    int sign = 1;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    const int value = sign * small_int();
    if (braced) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '}') throw SyntaxError(pos_, "expected '}'");
      ++pos_;
    }
    return value;
  }

  // Returns the variable slot or -1 if no variable starts here.
  int variable() {
    skip();
    if (pos_ >= s_.size()) return -1;
    const char c = s_[pos_];
    if (c == 'A') {
      ++pos_;
      return kVarA;
    }
    if (c == 't') {
      ++pos_;
      return kVarT;
    }
    if (c == 'w') {
      ++pos_;
      return kVarW;
    }
    const bool lambda_utf8 = s_.substr(pos_, 2) == "\xCE\x9B";
    if (c == 'L' || lambda_utf8) {
      pos_ += lambda_utf8 ? 2 : 1;
      if (pos_ < s_.size() && s_[pos_] == '_') ++pos_;
      const bool braced = pos_ < s_.size() && s_[pos_] == '{';
      if (braced) ++pos_;
      const std::size_t at_index = pos_;
      const int index = small_int();
      if (braced) {
        if (pos_ >= s_.size() || s_[pos_] != '}') throw SyntaxError(pos_, "expected '}'");
        ++pos_;
      }
      if (index < 1 || index > kLambdaCount) throw SyntaxError(at_index, "unsupported Lambda index");
      return lambda_var(index);
    }
    return -1;
  }

  std::pair<Exponents, mpz_class> term() {
    Exponents e{};
    mpz_class coef = 1;
    bool any = false;
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coef = mpz_class(digits());
      any = true;
    }
    while (true) {
      if (at('*')) ++pos_;
      const int v = variable();
      if (v < 0) break;
      e[v] += exponent();
      any = true;
    }
    if (at('/')) {
      if (!any) throw SyntaxError(pos_, "division needs a numerator");
      ++pos_;
      bool denom = false;
      while (true) {
        if (denom && at('*')) ++pos_;
        const int v = variable();
        if (v < 0) break;
        e[v] -= exponent();
        denom = true;
      }
      if (!denom) throw SyntaxError(pos_, "expected variable after '/'");
    }
    if (!any) throw SyntaxError(pos_, "expected term");
    skip();
    if (pos_ < s_.size() && s_[pos_] != '+' && s_[pos_] != '-')
      throw SyntaxError(pos_, "unexpected character");
    return {e, coef};
  }
};

const char* var_name(int v) {
  static const char* names[kVarCount] = {"A", "t", "w", "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "L9"};
  return names[v];
}

}  // namespace

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string print_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const mpz_class mag = abs(c);
    std::string factors;
    for (int v = 0; v < kVarCount; ++v) {
      if (e[v] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += var_name(v);
      if (e[v] != 1) factors += '^' + std::to_string(e[v]);
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + '*' + factors;
    }
  }
  return out;
}

}  // namespace knotoid

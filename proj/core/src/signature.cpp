#include <algorithm>

#include "knotoid/invariants.hpp"

namespace knotoid {

InvariantSignature signature(const Diagram& d) {
  return {print_poly(bracket(d)), print_poly(arrow(d)), print_poly(mock_alexander(d)),
          print_poly(affine_index(d)), print_poly(yamada_closure(d))};
}

int height_lower_bound(const InvariantSignature& s) {
  const MultiPoly arrow_poly = parse_poly(s.arrow);
  const MultiPoly affine_poly = parse_poly(s.affine);
  int bound = arrow_poly.lambda_degree();
  if (!affine_poly.is_zero()) {
    const int span = affine_poly.max_degree(kVarT) - affine_poly.min_degree(kVarT);
    bound = std::max(bound, span / 2);
  }
  return std::max(bound, 0);
}

}  // namespace knotoid

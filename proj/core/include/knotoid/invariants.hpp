#pragma once

#include <compare>
#include <string>
#include <vector>

#include "knotoid/diagram.hpp"
#include "knotoid/poly.hpp"

namespace knotoid {

// Kauffman bracket state sum times (-A^3)^(-writhe).
MultiPoly bracket_writhe_normalized(const Diagram& d);
// Multiplies by the power of (-A^3) that brings the lowest A-exponent into
// {0, 1, 2}. This is the form in which the reference tables print brackets.
MultiPoly unit_normalize_bracket(const MultiPoly& p);
// Bracket in table form: unit_normalize_bracket(bracket_writhe_normalized(d)).
MultiPoly bracket(const Diagram& d);

MultiPoly arrow(const Diagram& d);
MultiPoly affine_index(const Diagram& d);
MultiPoly mock_alexander(const Diagram& d);

// Spatial graph diagram: rotation system whose vertices are either graph
// vertices or 4-valent crossings (slots 0 and 2 under).
struct SpatialGraph {
  std::vector<int> base;       // darts of v are [base[v], base[v+1])
  std::vector<int> mate;       // involution on darts
  std::vector<char> crossing;  // per vertex

  int vertex_count() const { return static_cast<int>(crossing.size()); }
  int degree(int v) const { return base[v + 1] - base[v]; }
  int owner(int dart) const;
};
using ThetaCurve = SpatialGraph;

// Double-sided closure. `crossed` lists, in order from the tail face to the
// head face, one dart per crossed edge; each dart lies in the face the arcs
// are leaving. The default routes along a breadth-first shortest dual path.
ThetaCurve close_theta(const Diagram& d);
ThetaCurve close_theta(const Diagram& d, const std::vector<Dart>& crossed);
std::vector<Dart> shortest_closure_route(const Diagram& d);

// Yamada polynomial of a spatial graph diagram, before normalization.
MultiPoly yamada_raw(const SpatialGraph& g);
// Multiplies by the power of (-A) that makes the lowest exponent 0.
MultiPoly unit_normalize_yamada(const MultiPoly& p);
MultiPoly yamada_closure(const Diagram& d);

struct InvariantSignature {
  std::string bracket;
  std::string arrow;
  std::string mock;
  std::string affine;
  std::string yamada;
  friend auto operator<=>(const InvariantSignature&, const InvariantSignature&) = default;
};

InvariantSignature signature(const Diagram& d);
int height_lower_bound(const InvariantSignature& s);

}  // namespace knotoid

#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotoid/diagram.hpp"

namespace knotoid {

// A flat diagram: 4-valent crossings without over/under data and two
// unlabelled endpoints. `map` stores it as a Diagram whose decorations are
// ignored; it may trace out more than one component.
struct ShadowMap {
  Diagram map;
  std::string code;  // canonical shadow code
  bool single_component = true;
};

class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical code of the flat map: the least breadth-first EM string over both
// endpoints as root, crossings rotated freely.
std::string shadow_code(const Diagram& flat);
ShadowMap make_shadow(const Diagram& flat);

// All connected sphere maps with n 4-valent vertices and two 1-valent ones,
// up to orientation-preserving isomorphism (so mirror-image maps both
// appear). Sorted by code.
std::vector<ShadowMap> gen_shadows(int n, std::size_t max_shadows = 50'000'000);

// Every over/under assignment and both choices of tail, linkoids dropped,
// deduplicated and sorted by canonical code.
std::vector<Diagram> assign_crossings(const ShadowMap& s);

// planar_code input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnsupportedHeader : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlanarCodeIngest {
  std::vector<ShadowMap> shadows;
  std::size_t records = 0;   // graphs read
  std::size_t filtered = 0;  // graphs dropped by the degree filter
};

// Reads ">>planar_code<<" (or ">>planar_code le<<" / "be" for 2-byte
// entries) followed by records: vertex count, then per vertex its neighbours
// in clockwise order, each list closed by 0. Vertices are numbered from 1.
// Keeps graphs with exactly two vertices of degree 1 and all others of
// degree 4.
PlanarCodeIngest ingest_planar_code(std::istream& in);

// Writes graphs (0-based clockwise neighbour lists) in planar_code format.
void write_planar_code(std::ostream& out, const std::vector<std::vector<std::vector<int>>>& graphs);

}  // namespace knotoid

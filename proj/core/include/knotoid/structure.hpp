#pragma once

#include <string>
#include <vector>

#include "knotoid/diagram.hpp"
#include "knotoid/moves.hpp"

namespace knotoid {

// Swaps over and under at every crossing.
Diagram mirror(const Diagram& d);
// Turns the diagram over about a vertical axis in the plane: the rotation
// system is reflected and over/under exchanged.
Diagram rotate(const Diagram& d);
// Exchanges tail and head, keeping the picture.
Diagram reverse(const Diagram& d);

// A 2-edge cut with a side free of endpoints that holds at least one crossing.
bool is_composite(const Diagram& d);
// A bridge with at least one crossing on each side.
bool is_concatenation(const Diagram& d);
inline bool is_prime(const Diagram& d) { return !is_composite(d) && !is_concatenation(d); }

// How a symmetry answer was obtained.
enum class Evidence : std::uint8_t {
  Invariants,  // signatures differ: the symmetry definitely fails
  Search,      // an explicit move sequence connects the two diagrams
  Budget,      // no connection found within the search budgets (conjectural)
};

struct SymmetryFlags {
  bool chiral = true;
  Evidence chirality = Evidence::Budget;
  bool rotatable = false;
  Evidence rotatability = Evidence::Budget;

  // "yes" / "no"
  std::string chiral_label() const;
  // "yes" / "no" / "conjectured_no"
  std::string rotatable_label() const;
  friend bool operator==(const SymmetryFlags&, const SymmetryFlags&) = default;
};

// Tests a representative against its mirror image and its rotation, each
// taken with either orientation, trying each search stage in turn until a
// connection is found.
SymmetryFlags classify_symmetry(const Diagram& rep, const std::vector<ReachParams>& stages);
std::vector<SymmetryFlags> classify_symmetry(const std::vector<Diagram>& reps,
                                             const std::vector<ReachParams>& stages, int workers = 1);

}  // namespace knotoid

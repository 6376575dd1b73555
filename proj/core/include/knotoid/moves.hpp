#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotoid/diagram.hpp"

namespace knotoid {

enum class MoveKind : std::uint8_t { R1Minus, R1Plus, R2Minus, R2Plus, R3, Flype };

std::string to_string(MoveKind k);

// A located move. Anchors identify the local pattern:
//   R1Minus  {loop dart (v,i) mated to (v,i+1)}
//   R1Plus   {dart of the edge receiving the kink}; param 0..3 picks side/sign
//   R2Minus  {dart of the bigon face}
//   R2Plus   {dart a, dart b} on one face; param 1 puts strand a over
//   R3       {dart of the triangle face}
//   Flype    {dart of the outside crossing facing the tangle}; tangle = its crossings
struct MoveSite {
  MoveKind kind;
  std::vector<Dart> anchors;
  int param = 0;
  std::vector<int> tangle;
  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

class StaleSite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<MoveSite> find_sites(const Diagram& d, const std::vector<MoveKind>& kinds);
Diagram apply(const Diagram& d, const MoveSite& s);

struct ReachParams {
  int r = 0;                          // crossing-increasing R2 moves allowed per path
  bool use_flypes = false;
  std::size_t max_states = 5'000'000;  // distinct codes per call
  int max_crossings = -1;             // negative: start crossings + 2r
  int workers = 1;
};

struct ReachResult {
  std::vector<CanonicalCode> codes;  // sorted
  bool capped = false;
};

// All codes reachable with non-increasing moves (R1-, R2-, R3 and flypes when
// enabled) plus at most p.r R2+ moves along any path.
ReachResult reach(const Diagram& d, const ReachParams& p);

enum class Equivalence { Equivalent, NotConnected, Indeterminate };
// Bidirectional search; Equivalent is a proof, NotConnected only means the two
// reachable sets are disjoint, Indeterminate means a state cap was hit first.
Equivalence equivalent(const Diagram& a, const Diagram& b, const ReachParams& p);

struct SimplifyResult {
  Diagram diagram;
  bool capped = false;
};
// Minimum-crossing element of reach(d, p), ties broken by canonical code.
SimplifyResult simplify(const Diagram& d, const ReachParams& p);

}  // namespace knotoid

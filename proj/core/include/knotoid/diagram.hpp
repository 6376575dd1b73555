#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotoid/errors.hpp"

namespace knotoid {

enum class VertexKind : std::uint8_t { Tail, Head, Crossing };

// Dense half-edge index. Vertex v owns darts [base(v), base(v) + degree(v)).
using Dart = std::int32_t;

struct SlotRef {
  int vertex;
  int slot;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

enum class DiagramFault { DisconnectedGraph, NotSphere, MultiComponent, BadDegrees };

class InvalidDiagram : public std::runtime_error {
 public:
  InvalidDiagram(DiagramFault fault, const std::string& what)
      : std::runtime_error(what), fault_(fault) {}
  DiagramFault fault() const noexcept { return fault_; }

 private:
  DiagramFault fault_;
};

class InconsistentCode : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Knotoid diagram on the sphere as a rotation system.
//
// Slots of a vertex are listed counterclockwise. At a crossing, slots 0 and 2
// carry the under-strand and slots 1 and 3 the over-strand; every constructor
// normalizes to that form, so the over pair is always {1, 3}.
class Diagram {
 public:
  // Builds and validates. nbrs[v][s] names the slot mated to slot s of v.
  static Diagram from_adjacency(std::vector<VertexKind> kinds,
                                const std::vector<std::vector<SlotRef>>& nbrs);

  // Same as from_adjacency but skips the single-component check; used for
  // shadows and intermediate objects that may legitimately be linkoids.
  static Diagram from_adjacency_unchecked(std::vector<VertexKind> kinds,
                                          const std::vector<std::vector<SlotRef>>& nbrs);

  static Diagram trivial();

  int vertex_count() const { return static_cast<int>(kind_.size()); }
  int crossing_count() const { return vertex_count() - 2; }
  int dart_count() const { return static_cast<int>(mate_.size()); }
  int edge_count() const { return dart_count() / 2; }

  VertexKind kind(int v) const { return kind_[v]; }
  bool is_crossing(int v) const { return kind_[v] == VertexKind::Crossing; }
  int degree(int v) const { return base_[v + 1] - base_[v]; }
  Dart dart(int v, int slot) const { return base_[v] + slot; }
  int vertex_of(Dart d) const { return owner_[d]; }
  int slot_of(Dart d) const { return d - base_[owner_[d]]; }
  Dart mate(Dart d) const { return mate_[d]; }
  SlotRef ref(Dart d) const { return {owner_[d], slot_of(d)}; }

  // Rotation neighbours within the same vertex.
  Dart next_ccw(Dart d) const;
  Dart prev_ccw(Dart d) const;
  // Straight continuation through a crossing.
  Dart opposite(Dart d) const;
  bool is_under(Dart d) const { return is_crossing(owner_[d]) && slot_of(d) % 2 == 0; }

  int tail() const { return tail_; }
  int head() const { return head_; }
  Dart tail_dart() const { return base_[tail_]; }
  Dart head_dart() const { return base_[head_]; }

  // Face-walk successor: leave along d, arrive at mate(d), leave again by the
  // clockwise neighbour of the arrival dart. The face lies to the left.
  Dart face_next(Dart d) const { return prev_ccw(mate_[d]); }

  std::vector<std::vector<SlotRef>> adjacency() const;
  const std::vector<VertexKind>& kinds() const { return kind_; }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.kind_ == b.kind_ && a.mate_ == b.mate_;
  }

 private:
  Diagram() = default;
  static Diagram build(std::vector<VertexKind> kinds,
                       const std::vector<std::vector<SlotRef>>& nbrs, bool require_knotoid);

  std::vector<VertexKind> kind_;
  std::vector<int> base_;
  std::vector<int> owner_;
  std::vector<Dart> mate_;
  int tail_ = -1;
  int head_ = -1;
};

// Checks every structural invariant; throws InvalidDiagram on failure.
void validate(const Diagram& d);

// Dart orbits of face_next. Each face lists its darts in walk order.
std::vector<std::vector<Dart>> faces(const Diagram& d);
// face index of every dart (parallel to faces()).
std::vector<int> face_of_darts(const Diagram& d);

// Passes of the strand from tail to head. Each pass enters a vertex at
// `in` and leaves through `out` (for the endpoints one side is -1).
struct Pass {
  Dart in;
  Dart out;
};
std::vector<Pass> strand_passes(const Diagram& d);
// Ordered darts: tail dart, then for each crossing pass the entry and exit
// dart, ending with the head dart.
std::vector<Dart> strand(const Diagram& d);

// Sign of each crossing indexed by vertex (0 for endpoints).
std::vector<int> crossing_signs(const Diagram& d);
int writhe(const Diagram& d);
bool is_knot_like(const Diagram& d);

// Relabeling: vertex v becomes perm[v]; crossing slots rotate by
// offset[v] (must be even so the under pair stays {0,2}).
Diagram relabel(const Diagram& d, const std::vector<int>& perm, const std::vector<int>& offset);

// Codes. EM entries list, for every slot, the mated vertex letter and slot.
// Neither format marks the endpoints: the first one listed is the tail, and
// the printers order the endpoints accordingly.
Diagram parse_em(std::string_view text);
std::string print_em(const Diagram& d);
std::string print_em_pretty(const Diagram& d);
Diagram parse_pd(std::string_view text);
std::string print_pd(const Diagram& d);
// Accepts either format, detected by the first non-blank character.
Diagram parse_code(std::string_view text);

using CanonicalCode = std::string;
// Vertices relabelled by a breadth-first walk from the tail.
Diagram canonical_form(const Diagram& d);
CanonicalCode canonical_code(const Diagram& d);

}  // namespace knotoid

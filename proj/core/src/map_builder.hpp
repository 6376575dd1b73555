#pragma once

#include <vector>

#include "knotoid/diagram.hpp"

namespace knotoid::detail {

// Mutable rotation system used while rewriting a diagram. Vertices may be
// temporarily 2-valent; removed vertices are dropped by build().
struct MapBuilder {
  std::vector<VertexKind> kind;
  std::vector<std::vector<SlotRef>> nbr;
  std::vector<char> removed;

  explicit MapBuilder(const Diagram& d);

  int add_vertex(VertexKind k, int degree);
  void link(SlotRef a, SlotRef b);
  SlotRef mate(SlotRef a) const { return nbr[a.vertex][a.slot]; }
  // Inserts a 2-valent vertex into the edge at `a`; returns it. Slot 0 faces a.
  int subdivide(SlotRef a);
  // Deletes the given vertices, reconnecting strands that ran straight
  // through them (4-valent: opposite slot; 2-valent: the other slot).
  void splice_out(const std::vector<int>& gone);
  Diagram build() const;
};

}  // namespace knotoid::detail

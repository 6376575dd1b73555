#pragma once

#include <string>
#include <vector>

#include "knotoid/diagram.hpp"

namespace knotoid::detail {

struct Labelling {
  std::vector<int> perm;    // old vertex -> new vertex
  std::vector<int> offset;  // slot rotation per old vertex
};

// Breadth-first relabelling rooted at the endpoint `root`. When
// keep_parity is set, a crossing's entry slot becomes 0 (even entry) or 3
// (odd entry) so the under pair keeps slots {0,2}; otherwise the entry slot
// always becomes 0.
Labelling bfs_labelling(const Diagram& d, int root, bool keep_parity);

// EM string of d after applying the labelling, without building a Diagram.
std::string em_under(const Diagram& d, const Labelling& l);

}  // namespace knotoid::detail

#pragma once

#include <random>
#include <string>
#include <vector>

#include "knotoid/diagram.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/pipeline.hpp"

namespace testing_support {

// Appendix entries, loaded once.
const std::vector<knotoid::FixtureEntry>& appendix();
const knotoid::FixtureEntry& entry(const std::string& name);
knotoid::Diagram diagram(const std::string& name);
// Parsed PD codes of all entries with at most n crossings.
std::vector<knotoid::Diagram> diagrams_up_to(int n);

// Vertex numbers shuffled, crossing slots turned by random even steps.
knotoid::Diagram random_relabel(const knotoid::Diagram& d, std::mt19937& rng);

// Applies up to `steps` random moves of the given kinds, never exceeding
// max_crossings. Returns the sites used alongside the final diagram.
struct Walk {
  knotoid::Diagram diagram;
  std::vector<knotoid::MoveKind> moves;
};
Walk random_walk(const knotoid::Diagram& d, int steps, int max_crossings, const std::vector<knotoid::MoveKind>& kinds,
                 std::mt19937& rng);

const std::vector<knotoid::MoveKind>& all_moves();

// Inserts the knot-type diagram k into the edge of d at dart x.
knotoid::Diagram connected_sum(const knotoid::Diagram& d, knotoid::Dart x, const knotoid::Diagram& k);
// Joins the head of a to the tail of b.
knotoid::Diagram concatenate(const knotoid::Diagram& a, const knotoid::Diagram& b);
// The knot-type fixture with three crossings: the only nontrivial knot type
// that small.
knotoid::Diagram trefoil();

}  // namespace testing_support

#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "knotoid/moves.hpp"

namespace knotoid::detail {

void find_flype_sites(const Diagram& d, std::vector<MoveSite>& out);
Diagram apply_flype(const Diagram& d, const MoveSite& s);

// Budgeted breadth-first exploration of the move space. States are processed
// by descending remaining R2+ budget, so every code is expanded once, at the
// best budget it can be reached with.
class Explorer {
 public:
  // Called once per newly visited code (including the start); returning true
  // stops the exploration.
  using Visitor = std::function<bool(const CanonicalCode&, const Diagram&)>;

  Explorer(const Diagram& start, const ReachParams& p);

  // Visits the start state. Must be called before step().
  bool begin(const Visitor& visit);
  // Expands one breadth-first layer. Returns true if the visitor stopped it.
  bool step(const Visitor& visit);

  bool exhausted() const { return capped_ || (frontier_.empty() && level_ < 0); }
  bool capped() const { return capped_; }
  bool contains(const CanonicalCode& c) const { return best_.count(c) != 0; }
  std::size_t visited() const { return best_.size(); }
  std::size_t frontier_size() const { return frontier_.size(); }
  std::vector<CanonicalCode> codes() const;

 private:
  struct State {
    CanonicalCode code;
    Diagram diagram;
  };
  // Records code at budget; false if it was already known at least as well.
  bool admit(const CanonicalCode& code, int budget, bool& is_new);
  void refill();

  ReachParams p_;
  int max_crossings_;
  int level_;
  std::vector<Diagram> frontier_;
  std::vector<std::vector<State>> pending_;
  std::unordered_map<CanonicalCode, int> best_;
  bool capped_ = false;
};

}  // namespace knotoid::detail

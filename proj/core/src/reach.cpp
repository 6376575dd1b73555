#include <algorithm>

#include "knotoid/invariants.hpp"
#include "knotoid/moves.hpp"
#include "moves_internal.hpp"
#include "parallel.hpp"

namespace knotoid {

namespace detail {

namespace {

struct Successor {
  CanonicalCode code;
  Diagram diagram;
  bool increasing;
};

std::vector<Successor> successors(const Diagram& d, bool flypes, bool allow_increase) {
  std::vector<MoveKind> kinds{MoveKind::R1Minus, MoveKind::R2Minus, MoveKind::R3};
  if (flypes) kinds.push_back(MoveKind::Flype);
  if (allow_increase) kinds.push_back(MoveKind::R2Plus);
  std::vector<Successor> out;
  for (const MoveSite& s : find_sites(d, kinds)) {
    Diagram next = apply(d, s);
    CanonicalCode code = canonical_code(next);
    out.push_back({std::move(code), std::move(next), s.kind == MoveKind::R2Plus});
  }
  return out;
}

}  // namespace

Explorer::Explorer(const Diagram& start, const ReachParams& p)
    : p_(p),
      max_crossings_(p.max_crossings >= 0 ? p.max_crossings : start.crossing_count() + 2 * p.r),
      level_(p.r) {
  if (p.r < 0) throw std::invalid_argument("reach budget r must be non-negative");
  if (p.max_states == 0) throw std::invalid_argument("max_states must be positive");
  pending_.resize(static_cast<std::size_t>(p.r) + 1);
  frontier_.push_back(start);
}

bool Explorer::begin(const Visitor& visit) {
  const CanonicalCode code = canonical_code(frontier_.front());
  bool is_new = false;
  admit(code, level_, is_new);
  return visit(code, frontier_.front());
}

bool Explorer::admit(const CanonicalCode& code, int budget, bool& is_new) {
  auto [it, inserted] = best_.try_emplace(code, budget);
  is_new = inserted;
  if (inserted) {
    if (best_.size() > p_.max_states) capped_ = true;
    return true;
  }
  if (it->second >= budget) return false;
  it->second = budget;
  return true;
}

void Explorer::refill() {
  while (frontier_.empty() && level_ > 0) {
    --level_;
    for (State& s : pending_[level_])
      if (best_.at(s.code) == level_) frontier_.push_back(std::move(s.diagram));
    pending_[level_].clear();
  }
  if (frontier_.empty()) level_ = -1;
}

bool Explorer::step(const Visitor& visit) {
  if (capped_) return false;
  if (frontier_.empty()) refill();
  if (frontier_.empty()) return false;

  std::vector<std::vector<Successor>> out(frontier_.size());
  const bool may_grow = level_ > 0;
  parallel_for(frontier_.size(), p_.workers, [&](std::size_t i) {
    const bool grow = may_grow && frontier_[i].crossing_count() + 2 <= max_crossings_;
    out[i] = successors(frontier_[i], p_.use_flypes, grow);
  });

  std::vector<Diagram> next;
  bool stopped = false;
  for (auto& list : out) {
    for (Successor& s : list) {
      const int budget = s.increasing ? level_ - 1 : level_;
      bool is_new = false;
      if (!admit(s.code, budget, is_new)) continue;
      if (is_new && visit(s.code, s.diagram)) stopped = true;
      if (s.increasing)
        pending_[level_ - 1].push_back({std::move(s.code), std::move(s.diagram)});
      else
        next.push_back(std::move(s.diagram));
      if (stopped || capped_) break;
    }
    if (stopped || capped_) break;
  }
  frontier_ = std::move(next);
  if (capped_) frontier_.clear();
  return stopped;
}

std::vector<CanonicalCode> Explorer::codes() const {
  std::vector<CanonicalCode> out;
  out.reserve(best_.size());
  for (const auto& [code, budget] : best_) out.push_back(code);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

ReachResult reach(const Diagram& d, const ReachParams& p) {
  detail::Explorer e(d, p);
  const auto none = [](const CanonicalCode&, const Diagram&) { return false; };
  e.begin(none);
  while (!e.exhausted()) e.step(none);
  return {e.codes(), e.capped()};
}

Equivalence equivalent(const Diagram& a, const Diagram& b, const ReachParams& p) {
  if (canonical_code(a) == canonical_code(b)) return Equivalence::Equivalent;
  if (bracket_writhe_normalized(a) != bracket_writhe_normalized(b) || arrow(a) != arrow(b) ||
      affine_index(a) != affine_index(b))
    return Equivalence::NotConnected;

  detail::Explorer ea(a, p), eb(b, p);
  bool met = false;
  const auto in_b = [&](const CanonicalCode& c, const Diagram&) { return met = eb.contains(c); };
  const auto in_a = [&](const CanonicalCode& c, const Diagram&) { return met = ea.contains(c); };
  ea.begin(in_b);
  eb.begin(in_a);
  if (met) return Equivalence::Equivalent;
  while (!(ea.exhausted() && eb.exhausted())) {
    // Grow the side with the smaller frontier so the trees meet early.
    const bool pick_a = !ea.exhausted() && (eb.exhausted() || ea.frontier_size() <= eb.frontier_size());
    if (pick_a ? ea.step(in_b) : eb.step(in_a)) return Equivalence::Equivalent;
    if (ea.capped() || eb.capped()) return Equivalence::Indeterminate;
  }
  return Equivalence::NotConnected;
}

SimplifyResult simplify(const Diagram& d, const ReachParams& p) {
  detail::Explorer e(d, p);
  Diagram best = d;
  CanonicalCode best_code = canonical_code(d);
  const auto keep = [&](const CanonicalCode& c, const Diagram& x) {
    if (x.crossing_count() < best.crossing_count() ||
        (x.crossing_count() == best.crossing_count() && c < best_code)) {
      best = x;
      best_code = c;
    }
    return false;
  };
  e.begin(keep);
  while (!e.exhausted()) e.step(keep);
  return {canonical_form(best), e.capped()};
}

}  // namespace knotoid

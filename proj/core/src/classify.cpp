// Census classification. Per crossing number n:
//   1. enumerate diagrams from single-component shadows without a monogon;
//   2. drop diagrams the reduction stages bring below n crossings, where a
//      diagram whose signature matches no irreducible diagram of fewer
//      crossings is known to be irreducible without searching;
//   3. keep prime diagrams;
//   4. merge equivalent diagrams: crossing-preserving closures first, then
//      budgeted searches between same-signature classes;
//   5. fold each class with its reverse and mirror (and rotation) into one
//      record, dropped if a diagram of it turns out to be a concatenation.
#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>

#include "knotoid/enumerate.hpp"
#include "knotoid/pipeline.hpp"
#include "moves_internal.hpp"
#include "parallel.hpp"

namespace knotoid {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  // The smaller index stays the root, so roots do not depend on merge order.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

// True if some state within the stage budget has fewer than n crossings.
bool reduces(const Diagram& d, ReachParams stage) {
  const int n = d.crossing_count();
  stage.workers = 1;
  detail::Explorer e(d, stage);
  const auto below = [n](const CanonicalCode&, const Diagram& x) { return x.crossing_count() < n; };
  if (e.begin(below)) return true;
  while (!e.exhausted())
    if (e.step(below)) return true;
  return false;
}

// True if some n-crossing state within the stages is not prime. Primeness
// can hide: a knotoid may have one minimal diagram without any cut and
// another that is a concatenation.
bool splits(const Diagram& d, const std::vector<ReachParams>& stages) {
  const int n = d.crossing_count();
  const auto hit = [n](const CanonicalCode&, const Diagram& x) { return x.crossing_count() == n && !is_prime(x); };
  for (ReachParams stage : stages) {
    stage.workers = 1;
    detail::Explorer e(d, stage);
    if (e.begin(hit)) return true;
    while (!e.exhausted())
      if (e.step(hit)) return true;
  }
  return false;
}

bool has_monogon(const Diagram& d) { return !find_sites(d, {MoveKind::R1Minus}).empty(); }

struct Candidate {
  Diagram diagram;
  CanonicalCode code;
  InvariantSignature sig;
};

struct Level {
  std::vector<Candidate> irreducible;
  std::size_t shadows = 0;
  std::size_t diagrams = 0;
};

Level reduce_level(int n, bool keep_composites, const ClassifyParams& p, const std::set<InvariantSignature>& lower) {
  Level lv;
  std::vector<ShadowMap> shadows;
  for (ShadowMap& s : gen_shadows(n)) {
    if (!s.single_component || has_monogon(s.map)) continue;
    if (!keep_composites && !is_prime(s.map)) continue;
    shadows.push_back(std::move(s));
  }
  lv.shadows = shadows.size();

  std::vector<std::vector<Diagram>> per(shadows.size());
  detail::parallel_for(shadows.size(), p.workers, [&](std::size_t i) { per[i] = assign_crossings(shadows[i]); }, 4);
  std::vector<Diagram> all;
  for (auto& v : per)
    for (Diagram& d : v) all.push_back(std::move(d));
  lv.diagrams = all.size();

  std::vector<std::optional<Candidate>> kept(all.size());
  detail::parallel_for(all.size(), p.workers, [&](std::size_t i) {
    const Diagram& d = all[i];
    auto stage = p.reduce_stages.begin();
    if (stage != p.reduce_stages.end() && reduces(d, *stage++)) return;
    InvariantSignature sig = signature(d);
    // A knotoid of lower crossing number always leaves an irreducible
    // diagram at its own level, so an unseen signature settles the question.
    if (lower.count(sig)) {
      for (; stage != p.reduce_stages.end(); ++stage)
        if (reduces(d, *stage)) return;
    }
    kept[i] = Candidate{d, canonical_code(d), std::move(sig)};
  }, 4);
  for (auto& c : kept)
    if (c) lv.irreducible.push_back(std::move(*c));
  return lv;
}

// Merges diagrams joined by crossing-preserving moves (R3, flypes). A closure
// that dips below n crossings marks all its members reducible.
void close_level(int n, std::vector<Candidate>& members, UnionFind& uf, const ClassifyParams& p) {
  std::unordered_map<CanonicalCode, int> index;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) index.emplace(members[i].code, i);
  std::vector<char> covered(members.size(), 0), reducible(members.size(), 0);
  ReachParams closure{0, true, 0, -1, 1};
  closure.max_states = p.reduce_stages.empty() ? 200'000 : p.reduce_stages.front().max_states;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    if (covered[i]) continue;
    detail::Explorer e(members[i].diagram, closure);
    std::vector<int> seen;
    bool below = false;
    const auto visit = [&](const CanonicalCode& c, const Diagram& x) {
      if (x.crossing_count() < n) return below = true;
      const auto it = index.find(c);
      if (it != index.end()) seen.push_back(it->second);
      return false;
    };
    e.begin(visit);
    while (!below && !e.exhausted()) e.step(visit);
    for (int j : seen) {
      covered[j] = 1;
      uf.unite(i, j);
      if (below) reducible[j] = 1;
    }
  }
  // Rebuild without reducible members.
  std::vector<Candidate> kept;
  std::vector<int> remap(members.size(), -1);
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    if (reducible[uf.find(i)] || reducible[i]) continue;
    remap[i] = static_cast<int>(kept.size());
    kept.push_back(std::move(members[i]));
  }
  UnionFind next(kept.size());
  for (int i = 0; i < static_cast<int>(remap.size()); ++i) {
    if (remap[i] < 0) continue;
    const int r = remap[uf.find(i)];
    if (r >= 0) next.unite(remap[i], r);
  }
  members = std::move(kept);
  uf = std::move(next);
}

// Diagram index of a code, or -1.
using CodeIndex = std::unordered_map<CanonicalCode, int>;

int lookup(const CodeIndex& index, const Diagram& d) {
  const auto it = index.find(canonical_code(d));
  return it == index.end() ? -1 : it->second;
}

// Searches between the classes of each signature group. A group whose
// mirror-image group comes earlier copies that group's answers.
void search_groups(std::vector<Candidate>& members, UnionFind& uf, const std::vector<int>& mirror_of, const ClassifyParams& p) {
  std::map<InvariantSignature, std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) groups[members[i].sig].push_back(i);

  // Cheaper budgets first: a capped search at a larger budget can run out of
  // states before it gets to what a smaller budget would have met.
  std::vector<ReachParams> stages = p.search_stages;
  if (p.rotation_augmented) stages.insert(stages.end(), p.rotation_stages.begin(), p.rotation_stages.end());
  std::stable_sort(stages.begin(), stages.end(), [](const ReachParams& a, const ReachParams& b) {
    return std::pair(a.r, a.use_flypes) < std::pair(b.r, b.use_flypes);
  });
  stages.erase(std::unique(stages.begin(), stages.end(),
                           [](const ReachParams& a, const ReachParams& b) {
                             return a.r == b.r && a.use_flypes == b.use_flypes && a.max_states == b.max_states &&
                                    a.max_crossings == b.max_crossings;
                           }),
               stages.end());

  struct Job {
    std::vector<int> roots;  // one member per class
    bool derived = false;
    std::vector<std::pair<int, int>> joins;
  };
  std::vector<Job> jobs;
  for (auto& [sig, list] : groups) {
    Job job;
    std::set<int> roots;
    for (int i : list) roots.insert(uf.find(i));
    if (roots.size() < 2) continue;
    job.roots.assign(roots.begin(), roots.end());
    const int m = mirror_of[job.roots.front()];
    job.derived = m >= 0 && members[m].sig < sig;
    jobs.push_back(std::move(job));
  }

  detail::parallel_for(jobs.size(), p.workers, [&](std::size_t j) {
    Job& job = jobs[j];
    if (job.derived) return;
    // Two classes merge when their budgeted move spaces share a diagram.
    const int k = static_cast<int>(job.roots.size());
    UnionFind local(job.roots.size());
    int distinct = k;
    for (const ReachParams& stage : stages) {
      ReachParams s = stage;
      s.workers = 1;
      std::unordered_map<CanonicalCode, int> owner;
      for (int a = 0; a < k && distinct > 1; ++a) {
        if (local.find(a) != a) continue;
        detail::Explorer e(members[job.roots[a]].diagram, s);
        const auto visit = [&](const CanonicalCode& c, const Diagram&) {
          const auto [it, fresh] = owner.try_emplace(c, a);
          if (!fresh && local.find(it->second) != local.find(a)) {
            job.joins.emplace_back(job.roots[local.find(it->second)], job.roots[a]);
            local.unite(it->second, a);
            --distinct;
          }
          return distinct == 1;
        };
        bool done = e.begin(visit);
        while (!done && !e.exhausted()) done = e.step(visit);
      }
    }
  }, 1);
  for (const Job& job : jobs)
    for (auto [a, b] : job.joins) uf.unite(a, b);
  for (const Job& job : jobs) {
    if (!job.derived) continue;
    for (std::size_t a = 0; a < job.roots.size(); ++a)
      for (std::size_t b = a + 1; b < job.roots.size(); ++b)
        if (uf.find(mirror_of[job.roots[a]]) == uf.find(mirror_of[job.roots[b]])) uf.unite(job.roots[a], job.roots[b]);
  }
}

Evidence evidence_for(bool holds, bool same_signature) {
  if (holds) return Evidence::Search;
  return same_signature ? Evidence::Budget : Evidence::Invariants;
}

std::vector<CensusRecord> records_for_level(int n, std::vector<Candidate>& members, const ClassifyParams& p,
                                            std::size_t& classes) {
  UnionFind uf(members.size());
  close_level(n, members, uf, p);

  CodeIndex index;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) index.emplace(members[i].code, i);
  std::vector<int> mirror_of(members.size()), rotation_of(members.size()), reverse_of(members.size());
  detail::parallel_for(members.size(), p.workers, [&](std::size_t i) {
    mirror_of[i] = lookup(index, mirror(members[i].diagram));
    rotation_of[i] = lookup(index, rotate(members[i].diagram));
    reverse_of[i] = lookup(index, reverse(members[i].diagram));
  });
  search_groups(members, uf, mirror_of, p);

  std::set<int> class_roots;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) class_roots.insert(uf.find(i));
  classes = class_roots.size();

  // Records: classes folded with their reverses and mirror (and rotation)
  // images. Codes ignore which endpoint is the tail, so a knotoid and its
  // reverse share a record.
  UnionFind orbit(members.size());
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    orbit.unite(i, uf.find(i));
    if (reverse_of[i] >= 0) orbit.unite(i, reverse_of[i]);
    if (mirror_of[i] >= 0) orbit.unite(i, mirror_of[i]);
    if (p.rotation_augmented && rotation_of[i] >= 0) orbit.unite(i, rotation_of[i]);
  }
  // Members are sorted by code, so the orbit root is the least code.
  std::map<int, std::vector<int>> grouped;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) grouped[orbit.find(i)].push_back(i);
  std::vector<std::pair<int, std::vector<int>>> orbits(grouped.begin(), grouped.end());
  std::vector<char> drop(orbits.size(), 0);
  detail::parallel_for(orbits.size(), p.workers, [&](std::size_t k) {
    drop[k] = splits(members[orbits[k].first].diagram, p.reduce_stages);
  }, 1);
  for (std::size_t k = orbits.size(); k-- > 0;)
    if (drop[k]) orbits.erase(orbits.begin() + static_cast<std::ptrdiff_t>(k));

  std::vector<CensusRecord> out;
  std::vector<std::set<InvariantSignature>> sigs;
  for (const auto& [root, list] : orbits) {
    const Candidate& rep = members[root];
    CensusRecord r;
    r.crossings = n;
    r.representative = rep.code;
    r.pd = print_pd(rep.diagram);
    r.em = print_em(rep.diagram);
    r.signature = rep.sig;
    const int m = mirror_of[root], t = rotation_of[root], v = reverse_of[root];
    // Up to reversal: the image may land on the class of either orientation.
    const auto same = [&](int x) {
      return x >= 0 && (uf.find(x) == uf.find(root) || (v >= 0 && uf.find(x) == uf.find(v)));
    };
    const bool achiral = same(m);
    const bool rotatable = same(t);
    r.flags.chiral = !achiral;
    const auto same_sig = [&](int x) {
      return x >= 0 && (members[x].sig == rep.sig || (v >= 0 && members[x].sig == members[v].sig));
    };
    r.flags.chirality = evidence_for(achiral, same_sig(m));
    r.flags.rotatable = rotatable;
    r.flags.rotatability = evidence_for(rotatable, same_sig(t));
    r.status = r.flags.chiral ? GroupStatus::MirrorPair : GroupStatus::Unique;
    r.knot_like = is_knot_like(rep.diagram);
    r.height_lower_bound = height_lower_bound(rep.sig);
    std::set<InvariantSignature> s;
    for (int i : list) s.insert(members[i].sig);
    sigs.push_back(std::move(s));
    out.push_back(std::move(r));
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k].ordinal = static_cast<int>(k) + 1;

  // Records sharing a signature were never connected: possible duplicates.
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = 0; b < out.size(); ++b) {
      if (a == b) continue;
      const bool shared = std::any_of(sigs[a].begin(), sigs[a].end(), [&](const auto& s) { return sigs[b].count(s); });
      if (!shared) continue;
      out[a].status = GroupStatus::UnresolvedGroup;
      out[a].linked.push_back(out[b].id());
    }
  return out;
}

}  // namespace

std::string to_string(GroupStatus s) {
  switch (s) {
    case GroupStatus::Unique:
      return "unique";
    case GroupStatus::MirrorPair:
      return "mirror_pair";
    case GroupStatus::UnresolvedGroup:
      return "unresolved_group";
  }
  return "unique";
}

ClassifyParams ClassifyParams::defaults(int max_n) {
  ClassifyParams p;
  p.max_n = max_n;
  p.reduce_stages = {{0, false, 200'000, -1, 1}, {1, false, 200'000, -1, 1}, {1, true, 200'000, -1, 1},
                     {2, false, 200'000, -1, 1}};
  p.search_stages = {{2, true, 40'000, -1, 1}};
  p.rotation_stages = {{1, true, 40'000, -1, 1}, {2, true, 40'000, -1, 1}};
  return p;
}

void ClassifyParams::check() const {
  if (max_n < 0) throw std::invalid_argument("max_n must be non-negative");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  for (const auto* list : {&reduce_stages, &search_stages, &rotation_stages})
    for (const ReachParams& s : *list) {
      if (s.r < 0) throw std::invalid_argument("stage budget r must be non-negative");
      if (s.max_states == 0) throw std::invalid_argument("stage state cap must be positive");
    }
}

std::vector<CensusRecord> classify(const ClassifyParams& p, const std::function<void(const ClassifyLog&)>& log) {
  p.check();
  std::vector<CensusRecord> out;
  std::set<InvariantSignature> lower;
  for (int n = 0; n <= p.max_n; ++n) {
    // Composite diagrams only matter as witnesses for higher levels.
    Level lv = reduce_level(n, n < p.max_n, p, lower);
    for (const Candidate& c : lv.irreducible) lower.insert(c.sig);

    std::vector<Candidate> members;
    for (Candidate& c : lv.irreducible)
      if (is_prime(c.diagram)) members.push_back(std::move(c));
    std::sort(members.begin(), members.end(), [](const Candidate& a, const Candidate& b) { return a.code < b.code; });

    ClassifyLog entry;
    entry.crossings = n;
    entry.shadows = lv.shadows;
    entry.diagrams = lv.diagrams;
    entry.irreducible = lv.irreducible.size();
    entry.prime = members.size();
    auto records = records_for_level(n, members, p, entry.classes);
    entry.records = records.size();
    if (log) log(entry);
    for (auto& r : records) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace knotoid

#include "knotoid/structure.hpp"

#include <functional>

#include "knotoid/invariants.hpp"
#include "parallel.hpp"

namespace knotoid {

namespace {

// Rebuilds d with every crossing slot s renamed to f(s).
Diagram reslot(const Diagram& d, const std::function<int(int)>& f) {
  auto adj = d.adjacency();
  auto rename = [&](SlotRef r) { return d.is_crossing(r.vertex) ? SlotRef{r.vertex, f(r.slot)} : r; };
  std::vector<std::vector<SlotRef>> out(adj.size());
  for (int v = 0; v < d.vertex_count(); ++v) {
    out[v].resize(adj[v].size());
    for (int s = 0; s < static_cast<int>(adj[v].size()); ++s) out[v][rename({v, s}).slot] = rename(adj[v][s]);
  }
  return Diagram::from_adjacency(d.kinds(), out);
}

// Undirected edges as vertex pairs, one per dart pair.
std::vector<std::pair<int, int>> edges(const Diagram& d) {
  std::vector<std::pair<int, int>> out;
  for (Dart x = 0; x < d.dart_count(); ++x)
    if (x < d.mate(x)) out.emplace_back(d.vertex_of(x), d.vertex_of(d.mate(x)));
  return out;
}

// Component index of every vertex with the listed edges removed.
std::vector<int> components(const Diagram& d, const std::vector<std::pair<int, int>>& es, int skip1, int skip2) {
  const int n = d.vertex_count();
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (int e = 0; e < static_cast<int>(es.size()); ++e) {
    if (e == skip1 || e == skip2) continue;
    parent[find(es[e].first)] = find(es[e].second);
  }
  std::vector<int> comp(n);
  for (int v = 0; v < n; ++v) comp[v] = find(v);
  return comp;
}

// Compares a with an image b up to reversal: either orientation of b may
// match.
Evidence compare(const Diagram& a, const Diagram& b, const std::vector<ReachParams>& stages, bool& holds) {
  holds = false;
  const CanonicalCode code = canonical_code(a);
  std::vector<Diagram> targets;
  for (Diagram t : {b, reverse(b)}) {
    if (canonical_code(t) == code) {
      holds = true;
      return Evidence::Search;
    }
    targets.push_back(std::move(t));
  }
  const InvariantSignature sig = signature(a);
  std::erase_if(targets, [&](const Diagram& t) { return signature(t) != sig; });
  if (targets.empty()) return Evidence::Invariants;
  for (const ReachParams& p : stages)
    for (const Diagram& t : targets)
      if (equivalent(a, t, p) == Equivalence::Equivalent) {
        holds = true;
        return Evidence::Search;
      }
  return Evidence::Budget;
}

}  // namespace

Diagram mirror(const Diagram& d) {
  return reslot(d, [](int s) { return (s + 3) % 4; });
}

Diagram rotate(const Diagram& d) {
  return reslot(d, [](int s) { return (5 - s) % 4; });
}

Diagram reverse(const Diagram& d) {
  auto kinds = d.kinds();
  for (auto& k : kinds)
    if (k != VertexKind::Crossing) k = (k == VertexKind::Tail) ? VertexKind::Head : VertexKind::Tail;
  return Diagram::from_adjacency(std::move(kinds), d.adjacency());
}

bool is_composite(const Diagram& d) {
  const auto es = edges(d);
  const int m = static_cast<int>(es.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      // A genuine cut leaves exactly two sides; the knot factor is the side
      // without the endpoints.
      const auto comp = components(d, es, i, j);
      const int ct = comp[d.tail()];
      if (comp[d.head()] != ct) continue;
      int other = -1;
      bool two_sides = true;
      for (int v = 0; v < d.vertex_count() && two_sides; ++v) {
        if (comp[v] == ct) continue;
        if (other < 0) other = comp[v];
        two_sides = comp[v] == other;
      }
      if (other >= 0 && two_sides) return true;
    }
  }
  return false;
}

bool is_concatenation(const Diagram& d) {
  const auto es = edges(d);
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    const auto comp = components(d, es, i, -1);
    const int side = comp[es[i].first];
    if (side == comp[es[i].second]) continue;
    bool here = false, there = false;
    for (int v = 0; v < d.vertex_count(); ++v) {
      if (!d.is_crossing(v)) continue;
      (comp[v] == side ? here : there) = true;
    }
    if (here && there) return true;
  }
  return false;
}

std::string SymmetryFlags::chiral_label() const { return chiral ? "yes" : "no"; }

std::string SymmetryFlags::rotatable_label() const {
  if (rotatable) return "yes";
  return rotatability == Evidence::Invariants ? "no" : "conjectured_no";
}

SymmetryFlags classify_symmetry(const Diagram& rep, const std::vector<ReachParams>& stages) {
  SymmetryFlags f;
  bool achiral = false, rotatable = false;
  f.chirality = compare(rep, mirror(rep), stages, achiral);
  f.chiral = !achiral;
  f.rotatability = compare(rep, rotate(rep), stages, rotatable);
  f.rotatable = rotatable;
  return f;
}

std::vector<SymmetryFlags> classify_symmetry(const std::vector<Diagram>& reps, const std::vector<ReachParams>& stages,
                                             int workers) {
  std::vector<SymmetryFlags> out(reps.size());
  detail::parallel_for(reps.size(), workers, [&](std::size_t i) { out[i] = classify_symmetry(reps[i], stages); }, 2);
  return out;
}

}  // namespace knotoid

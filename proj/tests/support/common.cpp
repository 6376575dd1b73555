#include "common.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "knotoid/structure.hpp"

namespace testing_support {

using namespace knotoid;

const std::vector<FixtureEntry>& appendix() {
  static const std::vector<FixtureEntry> entries = read_fixtures(std::string(KNOTOID_TEST_DATA) + "/appendix.jsonl");
  return entries;
}

const FixtureEntry& entry(const std::string& name) {
  for (const FixtureEntry& e : appendix())
    if (e.name == name) return e;
  throw std::out_of_range("no fixture " + name);
}

Diagram diagram(const std::string& name) { return parse_pd(entry(name).pd); }

std::vector<Diagram> diagrams_up_to(int n) {
  std::vector<Diagram> out;
  for (const FixtureEntry& e : appendix())
    if (e.crossings <= n) out.push_back(parse_pd(e.pd));
  return out;
}

Diagram random_relabel(const Diagram& d, std::mt19937& rng) {
  std::vector<int> perm(d.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> offset(d.vertex_count(), 0);
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.is_crossing(v)) offset[v] = 2 * static_cast<int>(rng() % 2);
  return relabel(d, perm, offset);
}

Walk random_walk(const Diagram& d, int steps, int max_crossings, const std::vector<MoveKind>& kinds,
                 std::mt19937& rng) {
  Walk w{d, {}};
  for (int i = 0; i < steps; ++i) {
    auto sites = find_sites(w.diagram, kinds);
    std::erase_if(sites, [&](const MoveSite& s) {
      const int delta = s.kind == MoveKind::R1Plus ? 1 : s.kind == MoveKind::R2Plus ? 2 : 0;
      return w.diagram.crossing_count() + delta > max_crossings;
    });
    if (sites.empty()) break;
    const MoveSite& s = sites[rng() % sites.size()];
    w.diagram = apply(w.diagram, s);
    w.moves.push_back(s.kind);
  }
  return w;
}

namespace {

using Adjacency = std::vector<std::vector<SlotRef>>;

// Copies the crossings of k after the vertices already present, returning the
// new index of every vertex of k (endpoints map to -1).
std::vector<int> append_crossings(const Diagram& k, std::vector<VertexKind>& kinds, Adjacency& adj) {
  std::vector<int> at(k.vertex_count(), -1);
  for (int v = 0; v < k.vertex_count(); ++v)
    if (k.is_crossing(v)) {
      at[v] = static_cast<int>(kinds.size());
      kinds.push_back(VertexKind::Crossing);
      adj.emplace_back(4);
    }
  const Adjacency ka = k.adjacency();
  for (int v = 0; v < k.vertex_count(); ++v)
    if (at[v] >= 0)
      for (int s = 0; s < 4; ++s) {
        const SlotRef r = ka[v][s];
        if (at[r.vertex] >= 0) adj[at[v]][s] = {at[r.vertex], r.slot};
      }
  return at;
}

SlotRef end_ref(const Diagram& k, int endpoint, const std::vector<int>& at) {
  const SlotRef r = k.ref(k.mate(k.dart(endpoint, 0)));
  return {at[r.vertex], r.slot};
}

void link(Adjacency& adj, SlotRef a, SlotRef b) {
  adj[a.vertex][a.slot] = b;
  adj[b.vertex][b.slot] = a;
}

}  // namespace

Diagram connected_sum(const Diagram& d, Dart x, const Diagram& k) {
  std::vector<VertexKind> kinds = d.kinds();
  Adjacency adj = d.adjacency();
  const auto at = append_crossings(k, kinds, adj);
  const SlotRef p = d.ref(x), q = d.ref(d.mate(x));
  link(adj, p, end_ref(k, k.tail(), at));
  link(adj, end_ref(k, k.head(), at), q);
  return Diagram::from_adjacency(kinds, adj);
}

Diagram concatenate(const Diagram& a, const Diagram& b) {
  std::vector<VertexKind> kinds = a.kinds();
  Adjacency adj = a.adjacency();
  const SlotRef a_end = a.ref(a.mate(a.head_dart()));
  const auto at = append_crossings(b, kinds, adj);
  const SlotRef b_start = end_ref(b, b.tail(), at);
  const SlotRef b_end = end_ref(b, b.head(), at);
  // The head vertex of a is reused as the head of the result.
  link(adj, a_end, b_start);
  link(adj, {a.head(), 0}, b_end);
  return Diagram::from_adjacency(kinds, adj);
}

Diagram trefoil() {
  for (const FixtureEntry& e : testing_support::appendix()) {
    const Diagram d = parse_pd(e.pd);
    if (e.crossings == 3 && is_knot_like(d)) return d;
  }
  throw std::runtime_error("no knot-type trefoil among the fixtures");
}

const std::vector<MoveKind>& all_moves() {
  static const std::vector<MoveKind> kinds{MoveKind::R1Minus, MoveKind::R1Plus, MoveKind::R2Minus,
                                           MoveKind::R2Plus,  MoveKind::R3,     MoveKind::Flype};
  return kinds;
}

}  // namespace testing_support

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oracle {

using knotoid::MultiPoly;
using knotoid::SlotRef;
using knotoid::VertexKind;

int strand_components(const Adjacency& adj) {
  std::set<std::pair<int, int>> used;  // (vertex, slot) of each traversed half-edge
  const auto walk = [&](int v, int s) {
    // Leave v through slot s; stop on returning to a used half-edge or an end.
    while (used.insert({v, s}).second) {
      const SlotRef m = adj[v][s];
      used.insert({m.vertex, m.slot});
      if (adj[m.vertex].size() != 4) return;
      v = m.vertex;
      s = (m.slot + 2) % 4;
    }
  };
  int tail = -1;
  for (int v = 0; v < static_cast<int>(adj.size()) && tail < 0; ++v)
    if (adj[v].size() == 1) tail = v;
  if (tail < 0) throw std::invalid_argument("no endpoint");
  walk(tail, 0);
  int loops = 0;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    for (int s = 0; s < static_cast<int>(adj[v].size()); ++s)
      if (!used.count({v, s})) {
        ++loops;
        walk(v, s);
      }
  return 1 + loops;
}

int face_count(const Adjacency& adj) {
  std::set<std::pair<int, int>> seen;
  int faces = 0;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    for (int s = 0; s < static_cast<int>(adj[v].size()); ++s) {
      if (seen.count({v, s})) continue;
      ++faces;
      int cv = v, cs = s;
      while (seen.insert({cv, cs}).second) {
        const SlotRef m = adj[cv][cs];
        const int deg = static_cast<int>(adj[m.vertex].size());
        cv = m.vertex;
        cs = (m.slot + deg - 1) % deg;
      }
    }
  return faces;
}

std::string brute_canonical(const std::vector<VertexKind>& kinds, const Adjacency& adj, bool decorated) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> ends, crossings;
  for (int v = 0; v < n; ++v) (adj[v].size() == 1 ? ends : crossings).push_back(v);
  if (decorated && kinds[ends[0]] != VertexKind::Tail) std::swap(ends[0], ends[1]);

  std::string best;
  std::vector<int> order = crossings;
  std::vector<int> perm(n), rot(n, 0);
  const int step = decorated ? 2 : 1;
  const auto emit = [&] {
    std::string s;
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    for (int nv = 0; nv < n; ++nv) {
      const int v = inv[nv];
      const int deg = static_cast<int>(adj[v].size());
      for (int k = 0; k < deg; ++k) {
        const SlotRef m = adj[v][(k + rot[v]) % deg];
        const int mdeg = static_cast<int>(adj[m.vertex].size());
        s += static_cast<char>('A' + perm[m.vertex]);
        s += static_cast<char>('0' + (m.slot - rot[m.vertex] + mdeg) % mdeg);
      }
      s += ',';
    }
    if (best.empty() || s < best) best = s;
  };
  std::function<void(std::size_t)> rotations = [&](std::size_t i) {
    if (i == crossings.size()) return emit();
    for (int r = 0; r < 4; r += step) {
      rot[crossings[i]] = r;
      rotations(i + 1);
    }
  };
  const int swaps = decorated ? 1 : 2;
  for (int sw = 0; sw < swaps; ++sw) {
    perm[ends[sw]] = 0;
    perm[ends[1 - sw]] = n - 1;
    std::sort(order.begin(), order.end());
    do {
      for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = static_cast<int>(i) + 1;
      rotations(0);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return best;
}

ShadowCount shadows(int n) {
  // Half-edges: endpoint 0 has slot 0, endpoint 1 has slot 0, crossings 4.
  std::vector<SlotRef> darts;
  Adjacency adj(n + 2);
  adj[0].resize(1);
  adj[1].resize(1);
  for (int v = 2; v < n + 2; ++v) adj[v].resize(4);
  for (int v = 0; v < n + 2; ++v)
    for (int s = 0; s < static_cast<int>(adj[v].size()); ++s) darts.push_back({v, s});
  const int total_darts = static_cast<int>(darts.size());
  const int edges = total_darts / 2;
  const int vertices = n + 2;

  std::set<std::string> seen;
  ShadowCount out;
  std::vector<char> paired(total_darts, 0);
  const auto connected = [&] {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    const std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int v = 0; v < vertices; ++v)
      for (const SlotRef& m : adj[v]) parent[find(v)] = find(m.vertex);
    for (int v = 0; v < vertices; ++v)
      if (find(v) != find(0)) return false;
    return true;
  };
  std::function<void()> pair_next = [&] {
    int i = 0;
    while (i < total_darts && paired[i]) ++i;
    if (i == total_darts) {
      if (!connected() || vertices - edges + face_count(adj) != 2) return;
      std::vector<VertexKind> kinds(vertices, VertexKind::Crossing);
      kinds[0] = VertexKind::Tail;
      kinds[1] = VertexKind::Head;
      if (!seen.insert(brute_canonical(kinds, adj, false)).second) return;
      ++out.total;
      if (strand_components(adj) == 1) ++out.single_component;
      return;
    }
    paired[i] = 1;
    for (int j = i + 1; j < total_darts; ++j) {
      if (paired[j]) continue;
      paired[j] = 1;
      adj[darts[i].vertex][darts[i].slot] = darts[j];
      adj[darts[j].vertex][darts[j].slot] = darts[i];
      pair_next();
      paired[j] = 0;
    }
    paired[i] = 0;
  };
  pair_next();
  return out;
}

int pd_writhe(const std::string& pd) {
  static const std::regex group(R"(\[([^\]]*)\])");
  std::vector<std::vector<int>> entries;
  for (auto it = std::sregex_iterator(pd.begin(), pd.end(), group); it != std::sregex_iterator(); ++it) {
    std::vector<int> e;
    std::stringstream ss((*it)[1].str());
    std::string tok;
    while (std::getline(ss, tok, ',')) e.push_back(std::stoi(tok));
    entries.push_back(e);
  }
  // Each bracket lists a vertex's arcs counterclockwise; at a crossing the
  // under-strand uses positions 0 and 2. Trace the strand from the first
  // endpoint, recording the position each pass leaves through.
  std::map<int, std::vector<std::pair<int, int>>> where;
  for (int v = 0; v < static_cast<int>(entries.size()); ++v)
    for (int s = 0; s < static_cast<int>(entries[v].size()); ++s) where[entries[v][s]].push_back({v, s});
  std::vector<int> under_out(entries.size(), -1), over_out(entries.size(), -1);
  int v = 0, s = 0;
  while (entries[v].size() == 4 || (v == 0 && s == 0)) {
    const int arc = entries[v][s];
    const auto& ends = where.at(arc);
    const auto next = ends[0] == std::pair(v, s) ? ends[1] : ends[0];
    v = next.first;
    if (entries[v].size() != 4) break;
    s = (next.second + 2) % 4;
    (s % 2 == 0 ? under_out : over_out)[v] = s;
  }
  // Slots sit at quarter turns counterclockwise. A crossing is positive
  // when the under-strand points a quarter turn counterclockwise of the
  // over-strand.
  int w = 0;
  for (std::size_t x = 0; x < entries.size(); ++x)
    if (entries[x].size() == 4) w += under_out[x] == (over_out[x] + 1) % 4 ? 1 : -1;
  return w;
}

namespace {

MultiPoly mono(int a_power, long c = 1) { return MultiPoly::variable(knotoid::kVarA, a_power) * MultiPoly(c); }

// Subset expansion on a plane multigraph given as an edge list; `circles`
// counts vertex-free closed loops, each a one-vertex, one-loop graph.
MultiPoly subset_expansion(int vertices, const std::vector<std::pair<int, int>>& edges, int circles) {
  const MultiPoly y = mono(1, -1) + MultiPoly(-2) + mono(-1, -1);
  const int m = static_cast<int>(edges.size());
  // Collect counts of (components, nullity) first, then combine.
  std::map<std::pair<int, int>, long> tally;
  std::vector<int> parent(vertices);
  const std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int comps = vertices, kept = 0;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1) continue;  // e is in F: deleted
      ++kept;
      const int a = find(edges[e].first), b = find(edges[e].second);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    ++tally[{comps, kept - vertices + comps}];
  }
  MultiPoly sum;
  for (const auto& [key, count] : tally) {
    MultiPoly term(key.first % 2 ? -count : count);
    for (int i = 0; i < key.second; ++i) term *= y;
    sum += term;
  }
  // A free circle evaluates to -y - 1.
  const MultiPoly circle = MultiPoly(-1) * y - MultiPoly(1);
  for (int i = 0; i < circles; ++i) sum *= circle;
  return sum;
}

}  // namespace

MultiPoly yamada(const knotoid::SpatialGraph& g) {
  const int nv = g.vertex_count();
  std::vector<int> cross;
  for (int v = 0; v < nv; ++v)
    if (g.crossing[v]) cross.push_back(v);
  const int k = static_cast<int>(cross.size());
  const int darts = static_cast<int>(g.mate.size());

  MultiPoly total;
  std::vector<int> choice(k, 0);
  long states = 1;
  for (int i = 0; i < k; ++i) states *= 3;
  for (long code = 0; code < states; ++code) {
    long c = code;
    int a_power = 0;
    for (int i = 0; i < k; ++i) {
      choice[i] = static_cast<int>(c % 3);
      c /= 3;
      a_power += choice[i] == 0 ? 1 : choice[i] == 1 ? -1 : 0;
    }
    // Darts joined inside a smoothed crossing.
    std::vector<int> through(darts, -1);
    std::vector<char> is_vertex(nv, 1);
    for (int i = 0; i < k; ++i) {
      const int v = cross[i];
      const int b = g.base[v];
      if (choice[i] == 2) continue;
      is_vertex[v] = 0;
      // Slots are counterclockwise, under-strand on 0 and 2. The A-smoothing
      // joins the regions swept when the under-strand turns counterclockwise
      // onto the over-strand: slot 0 with 1 and slot 2 with 3.
      const bool a_smooth = choice[i] == 0;
      const int p = a_smooth ? 0 : 1;
      through[b + p] = b + p + 1;
      through[b + p + 1] = b + p;
      through[b + (p + 2) % 4] = b + (p + 3) % 4;
      through[b + (p + 3) % 4] = b + (p + 2) % 4;
    }
    std::vector<int> id(nv, -1);
    int vertices = 0;
    for (int v = 0; v < nv; ++v)
      if (is_vertex[v]) id[v] = vertices++;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> done(darts, 0);
    int circles = 0;
    for (int d = 0; d < darts; ++d) {
      if (done[d] || through[d] >= 0) continue;
      // Follow from a vertex dart until the next vertex dart.
      int cur = d;
      done[cur] = 1;
      int m = g.mate[cur];
      while (through[m] >= 0) {
        done[m] = 1;
        cur = through[m];
        done[cur] = 1;
        m = g.mate[cur];
      }
      done[m] = 1;
      edges.emplace_back(id[g.owner(d)], id[g.owner(m)]);
    }
    for (int d = 0; d < darts; ++d) {
      if (done[d]) continue;
      ++circles;
      int cur = d;
      while (!done[cur]) {
        done[cur] = 1;
        const int m = g.mate[cur];
        done[m] = 1;
        cur = through[m];
      }
    }
    total += mono(a_power) * subset_expansion(vertices, edges, circles);
  }
  return total;
}

MultiPoly normalize_yamada(const MultiPoly& p) {
  if (p.is_zero()) return p;
  const int low = p.min_degree(knotoid::kVarA);
  MultiPoly out = p.shifted(knotoid::kVarA, -low);
  if (low % 2 != 0) out = -out;
  return out;
}

}  // namespace oracle

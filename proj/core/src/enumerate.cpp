#include "knotoid/enumerate.hpp"

#include <algorithm>
#include <set>

#include "canonical_internal.hpp"

namespace knotoid {

namespace {

constexpr SlotRef kOpen{-1, -1};

// Connected partial map grown one open leg at a time.
struct Partial {
  std::vector<VertexKind> kind;
  std::vector<std::vector<SlotRef>> nbr;

  int add(VertexKind k, int degree) {
    kind.push_back(k);
    nbr.emplace_back(degree, kOpen);
    return static_cast<int>(kind.size()) - 1;
  }
  void pop() {
    kind.pop_back();
    nbr.pop_back();
  }
  void link(SlotRef a, SlotRef b) {
    nbr[a.vertex][a.slot] = b;
    nbr[b.vertex][b.slot] = a;
  }
  void unlink(SlotRef a, SlotRef b) {
    nbr[a.vertex][a.slot] = kOpen;
    nbr[b.vertex][b.slot] = kOpen;
  }
  bool open(SlotRef r) const { return nbr[r.vertex][r.slot].vertex < 0; }

  // Open legs lying on the same face as `x`, open legs acting as dead ends.
  std::vector<SlotRef> legs_on_face_of(SlotRef x) const {
    std::vector<SlotRef> out;
    SlotRef cur = x;
    std::size_t guard = 0;
    do {
      if (open(cur)) out.push_back(cur);
      const SlotRef arrive = open(cur) ? cur : nbr[cur.vertex][cur.slot];
      const int deg = static_cast<int>(nbr[arrive.vertex].size());
      cur = {arrive.vertex, (arrive.slot + deg - 1) % deg};
      if (++guard > 1'000'000) throw std::logic_error("face walk did not close");
    } while (!(cur == x));
    return out;
  }
};

struct Generator {
  int n;
  std::size_t cap;
  Partial p;
  std::set<std::string> seen;
  std::vector<ShadowMap> out;
  int crossings = 0;
  int endpoints = 1;

  void run() {
    p.add(VertexKind::Tail, 1);
    grow();
  }

  void emit() {
    Diagram flat = Diagram::from_adjacency_unchecked(p.kind, p.nbr);
    ShadowMap s = make_shadow(flat);
    if (seen.insert(s.code).second) {
      out.push_back(std::move(s));
      if (out.size() > cap) throw SizeCapExceeded("shadow count exceeds the configured cap");
    }
  }

  void grow() {
    SlotRef x = kOpen;
    for (int v = 0; v < static_cast<int>(p.nbr.size()) && x.vertex < 0; ++v)
      for (int s = 0; s < static_cast<int>(p.nbr[v].size()); ++s)
        if (p.open({v, s})) {
          x = {v, s};
          break;
        }
    if (x.vertex < 0) {
      if (crossings == n && endpoints == 2) emit();
      return;
    }

    if (crossings < n) {
      const int c = p.add(VertexKind::Crossing, 4);
      ++crossings;
      p.link(x, {c, 0});
      grow();
      p.unlink(x, {c, 0});
      --crossings;
      p.pop();
    }
    if (endpoints < 2) {
      const int e = p.add(VertexKind::Head, 1);
      ++endpoints;
      p.link(x, {e, 0});
      grow();
      p.unlink(x, {e, 0});
      --endpoints;
      p.pop();
    }
    for (const SlotRef& y : p.legs_on_face_of(x)) {
      if (y == x) continue;
      p.link(x, y);
      grow();
      p.unlink(x, y);
    }
  }
};

Diagram decorate(const ShadowMap& s, std::uint32_t overs, bool swap_ends) {
  const Diagram& f = s.map;
  auto kinds = f.kinds();
  if (swap_ends)
    for (auto& k : kinds)
      if (k != VertexKind::Crossing) k = (k == VertexKind::Tail) ? VertexKind::Head : VertexKind::Tail;
  std::vector<int> shift(f.vertex_count(), 0);
  int bit = 0;
  for (int v = 0; v < f.vertex_count(); ++v)
    if (f.is_crossing(v)) shift[v] = ((overs >> bit++) & 1u) ? 1 : 0;
  const auto adj = f.adjacency();
  std::vector<std::vector<SlotRef>> out(adj.size());
  for (int v = 0; v < f.vertex_count(); ++v) {
    const int deg = f.degree(v);
    out[v].resize(deg);
    for (int s = 0; s < deg; ++s) {
      const SlotRef m = adj[v][s];
      out[v][(s + deg - shift[v]) % deg] = {m.vertex, (m.slot + f.degree(m.vertex) - shift[m.vertex]) % f.degree(m.vertex)};
    }
  }
  return Diagram::from_adjacency(std::move(kinds), out);
}

}  // namespace

std::string shadow_code(const Diagram& flat) {
  std::string best;
  for (int root : {flat.tail(), flat.head()}) {
    std::string code = detail::em_under(flat, detail::bfs_labelling(flat, root, false));
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

ShadowMap make_shadow(const Diagram& flat) {
  // Rebuild in canonical labelling so equal shadows are equal objects.
  std::string best_root_code;
  int root = flat.tail();
  for (int r : {flat.tail(), flat.head()}) {
    std::string c = detail::em_under(flat, detail::bfs_labelling(flat, r, false));
    if (best_root_code.empty() || c < best_root_code) {
      best_root_code = std::move(c);
      root = r;
    }
  }
  const auto l = detail::bfs_labelling(flat, root, false);
  const int n = flat.vertex_count();
  std::vector<VertexKind> kinds(n);
  std::vector<std::vector<SlotRef>> adj(n);
  for (int v = 0; v < n; ++v) {
    const int nv = l.perm[v];
    const int deg = flat.degree(v);
    kinds[nv] = flat.is_crossing(v) ? VertexKind::Crossing : (nv == 0 ? VertexKind::Tail : VertexKind::Head);
    adj[nv].resize(deg);
    for (int s = 0; s < deg; ++s) {
      const Dart m = flat.mate(flat.dart(v, s));
      const int w = flat.vertex_of(m);
      const int wdeg = flat.degree(w);
      adj[nv][(s - l.offset[v] + deg) % deg] = {l.perm[w], (flat.slot_of(m) - l.offset[w] + wdeg) % wdeg};
    }
  }
  ShadowMap s{Diagram::from_adjacency_unchecked(kinds, adj), best_root_code, true};
  try {
    Diagram::from_adjacency(kinds, adj);
  } catch (const InvalidDiagram& e) {
    if (e.fault() != DiagramFault::MultiComponent) throw;
    s.single_component = false;
  }
  return s;
}

std::vector<ShadowMap> gen_shadows(int n, std::size_t max_shadows) {
  if (n < 0) throw std::invalid_argument("crossing count must be non-negative");
  Generator g{n, max_shadows, {}, {}, {}};
  g.run();
  std::sort(g.out.begin(), g.out.end(), [](const ShadowMap& a, const ShadowMap& b) { return a.code < b.code; });
  return std::move(g.out);
}

std::vector<Diagram> assign_crossings(const ShadowMap& s) {
  if (!s.single_component) return {};
  std::vector<std::pair<CanonicalCode, Diagram>> found;
  const int n = s.map.crossing_count();
  std::set<CanonicalCode> seen;
  for (std::uint32_t overs = 0; overs < (1u << n); ++overs) {
    for (bool swap_ends : {false, true}) {
      Diagram d = canonical_form(decorate(s, overs, swap_ends));
      CanonicalCode c = canonical_code(d);
      if (seen.insert(c).second) found.emplace_back(std::move(c), std::move(d));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Diagram> out;
  out.reserve(found.size());
  for (auto& [c, d] : found) out.push_back(std::move(d));
  return out;
}

}  // namespace knotoid

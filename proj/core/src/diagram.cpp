#include "knotoid/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace knotoid {

namespace {

int expected_degree(VertexKind k) { return k == VertexKind::Crossing ? 4 : 1; }

}  // namespace

Diagram Diagram::from_adjacency(std::vector<VertexKind> kinds,
                                const std::vector<std::vector<SlotRef>>& nbrs) {
  return build(std::move(kinds), nbrs, true);
}

Diagram Diagram::from_adjacency_unchecked(std::vector<VertexKind> kinds,
                                          const std::vector<std::vector<SlotRef>>& nbrs) {
  return build(std::move(kinds), nbrs, false);
}

Diagram Diagram::trivial() {
  return from_adjacency({VertexKind::Tail, VertexKind::Head}, {{{1, 0}}, {{0, 0}}});
}

Diagram Diagram::build(std::vector<VertexKind> kinds,
                       const std::vector<std::vector<SlotRef>>& nbrs, bool require_knotoid) {
  if (kinds.size() != nbrs.size()) throw InconsistentCode("vertex kind count differs from entry count");
  Diagram d;
  const int n = static_cast<int>(kinds.size());
  int tails = 0, heads = 0;
  d.base_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    const int deg = static_cast<int>(nbrs[v].size());
    if (deg != expected_degree(kinds[v]))
      throw InvalidDiagram(DiagramFault::BadDegrees,
                           "vertex " + std::to_string(v) + " has degree " + std::to_string(deg));
    if (kinds[v] == VertexKind::Tail) {
      ++tails;
      d.tail_ = v;
    } else if (kinds[v] == VertexKind::Head) {
      ++heads;
      d.head_ = v;
    }
    d.base_[v + 1] = d.base_[v] + deg;
  }
  if (tails != 1 || heads != 1)
    throw InvalidDiagram(DiagramFault::BadDegrees, "diagram needs exactly one tail and one head");
  d.kind_ = std::move(kinds);
  const int darts = d.base_[n];
  d.owner_.resize(darts);
  d.mate_.resize(darts);
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < d.degree(v); ++s) {
      const SlotRef r = nbrs[v][s];
      if (r.vertex < 0 || r.vertex >= n || r.slot < 0 || r.slot >= static_cast<int>(nbrs[r.vertex].size()))
        throw InconsistentCode("reference out of range at vertex " + std::to_string(v));
      const SlotRef back = nbrs[r.vertex][r.slot];
      if (back.vertex != v || back.slot != s || (r.vertex == v && r.slot == s))
        throw InconsistentCode("references do not pair up at vertex " + std::to_string(v) +
                               " slot " + std::to_string(s));
      d.owner_[d.base_[v] + s] = v;
      d.mate_[d.base_[v] + s] = d.base_[r.vertex] + r.slot;
    }
  }

  // Connectivity.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int s = 0; s < d.degree(v); ++s) {
      const int w = d.owner_[d.mate_[d.base_[v] + s]];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw InvalidDiagram(DiagramFault::DisconnectedGraph, "graph is disconnected");

  // Euler characteristic of the embedding.
  std::vector<char> used(darts, 0);
  int face_count = 0;
  for (Dart s = 0; s < darts; ++s) {
    if (used[s]) continue;
    ++face_count;
    for (Dart x = s; !used[x]; x = d.face_next(x)) used[x] = 1;
  }
  const int crossings = n - 2;
  if (n - darts / 2 + face_count != 2)
    throw InvalidDiagram(DiagramFault::NotSphere, "embedding is not spherical");
  if (face_count != crossings + 1)
    throw InvalidDiagram(DiagramFault::NotSphere, "face count differs from crossings + 1");

  if (require_knotoid) {
    int edges = 0;
    Dart cur = d.tail_dart();
    while (true) {
      ++edges;
      const Dart in = d.mate_[cur];
      if (!d.is_crossing(d.owner_[in])) break;
      cur = d.opposite(in);
      if (edges > darts) break;
    }
    if (d.owner_[d.mate_[cur]] != d.head_ || edges != darts / 2)
      throw InvalidDiagram(DiagramFault::MultiComponent, "strand does not cover the diagram");
  }
  return d;
}

Dart Diagram::next_ccw(Dart d) const {
  const int v = owner_[d];
  const int deg = degree(v);
  return base_[v] + (d - base_[v] + 1) % deg;
}

Dart Diagram::prev_ccw(Dart d) const {
  const int v = owner_[d];
  const int deg = degree(v);
  return base_[v] + (d - base_[v] + deg - 1) % deg;
}

Dart Diagram::opposite(Dart d) const {
  const int v = owner_[d];
  return base_[v] + (d - base_[v] + 2) % 4;
}

std::vector<std::vector<SlotRef>> Diagram::adjacency() const {
  std::vector<std::vector<SlotRef>> out(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) {
    out[v].reserve(degree(v));
    for (int s = 0; s < degree(v); ++s) out[v].push_back(ref(mate_[dart(v, s)]));
  }
  return out;
}

void validate(const Diagram& d) {
  // Construction already enforces the invariants; rebuild to re-check.
  (void)Diagram::from_adjacency(d.kinds(), d.adjacency());
}

std::vector<std::vector<Dart>> faces(const Diagram& d) {
  std::vector<std::vector<Dart>> out;
  std::vector<char> used(d.dart_count(), 0);
  for (Dart s = 0; s < d.dart_count(); ++s) {
    if (used[s]) continue;
    out.emplace_back();
    for (Dart x = s; !used[x]; x = d.face_next(x)) {
      used[x] = 1;
      out.back().push_back(x);
    }
  }
  return out;
}

std::vector<int> face_of_darts(const Diagram& d) {
  std::vector<int> out(d.dart_count(), -1);
  int f = 0;
  for (Dart s = 0; s < d.dart_count(); ++s) {
    if (out[s] >= 0) continue;
    for (Dart x = s; out[x] < 0; x = d.face_next(x)) out[x] = f;
    ++f;
  }
  return out;
}

std::vector<Pass> strand_passes(const Diagram& d) {
  std::vector<Pass> out;
  out.push_back({-1, d.tail_dart()});
  Dart cur = d.tail_dart();
  while (true) {
    const Dart in = d.mate(cur);
    if (!d.is_crossing(d.vertex_of(in))) {
      out.push_back({in, -1});
      break;
    }
    cur = d.opposite(in);
    out.push_back({in, cur});
  }
  return out;
}

std::vector<Dart> strand(const Diagram& d) {
  std::vector<Dart> out;
  for (const Pass& p : strand_passes(d)) {
    if (p.in >= 0) out.push_back(p.in);
    if (p.out >= 0) out.push_back(p.out);
  }
  return out;
}

std::vector<int> crossing_signs(const Diagram& d) {
  std::vector<int> under_in(d.vertex_count(), -1), over_in(d.vertex_count(), -1);
  for (const Pass& p : strand_passes(d)) {
    if (p.in < 0 || p.out < 0) continue;
    const int v = d.vertex_of(p.in);
    (d.is_under(p.in) ? under_in : over_in)[v] = d.slot_of(p.in);
  }
  std::vector<int> sign(d.vertex_count(), 0);
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (!d.is_crossing(v)) continue;
    sign[v] = ((over_in[v] - under_in[v] + 4) % 4 == 1) ? -1 : 1;
  }
  return sign;
}

int writhe(const Diagram& d) {
  const auto s = crossing_signs(d);
  return std::accumulate(s.begin(), s.end(), 0);
}

bool is_knot_like(const Diagram& d) {
  const auto f = face_of_darts(d);
  return f[d.tail_dart()] == f[d.head_dart()];
}

Diagram relabel(const Diagram& d, const std::vector<int>& perm, const std::vector<int>& offset) {
  const int n = d.vertex_count();
  std::vector<VertexKind> kinds(n);
  std::vector<std::vector<SlotRef>> nbrs(n);
  auto new_slot = [&](int v, int s) {
    const int deg = d.degree(v);
    return ((s - offset[v]) % deg + deg) % deg;
  };
  for (int v = 0; v < n; ++v) {
    kinds[perm[v]] = d.kind(v);
    nbrs[perm[v]].resize(d.degree(v));
    for (int s = 0; s < d.degree(v); ++s) {
      const SlotRef r = d.ref(d.mate(d.dart(v, s)));
      nbrs[perm[v]][new_slot(v, s)] = {perm[r.vertex], new_slot(r.vertex, r.slot)};
    }
  }
  return Diagram::from_adjacency_unchecked(std::move(kinds), nbrs);
}

}  // namespace knotoid

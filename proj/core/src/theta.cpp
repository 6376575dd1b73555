// Double-sided closure of a knotoid diagram into a theta-curve diagram.
#include <algorithm>
#include <deque>

#include "knotoid/invariants.hpp"

namespace knotoid {

int SpatialGraph::owner(int dart) const {
  return static_cast<int>(std::upper_bound(base.begin(), base.end(), dart) - base.begin()) - 1;
}

std::vector<Dart> shortest_closure_route(const Diagram& d) {
  const auto face = face_of_darts(d);
  const int nf = d.crossing_count() + 1;
  const int from = face[d.tail_dart()];
  const int to = face[d.head_dart()];
  std::vector<Dart> via(nf, -1);
  std::vector<char> seen(nf, 0);
  seen[from] = 1;
  // Darts grouped by the face they lie in, in increasing dart order.
  std::vector<std::vector<Dart>> by_face(nf);
  for (Dart x = 0; x < d.dart_count(); ++x) by_face[face[x]].push_back(x);
  std::deque<int> queue{from};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (Dart x : by_face[f]) {
      const int g = face[d.mate(x)];
      if (seen[g]) continue;
      seen[g] = 1;
      via[g] = x;
      queue.push_back(g);
    }
  }
  std::vector<Dart> route;
  for (int f = to; f != from; f = face[via[f]]) route.push_back(via[f]);
  std::reverse(route.begin(), route.end());
  return route;
}

ThetaCurve close_theta(const Diagram& d) { return close_theta(d, shortest_closure_route(d)); }

ThetaCurve close_theta(const Diagram& d, const std::vector<Dart>& crossed) {
  const auto face = face_of_darts(d);
  {
    int f = face[d.tail_dart()];
    for (Dart x : crossed) {
      if (face[x] != f) throw std::invalid_argument("closure route is not a dual path");
      f = face[d.mate(x)];
    }
    if (f != face[d.head_dart()]) throw std::invalid_argument("closure route does not reach the head");
  }

  std::vector<std::vector<SlotRef>> adj(d.vertex_count());
  std::vector<char> crossing(d.vertex_count(), 0);
  for (int v = 0; v < d.vertex_count(); ++v) {
    crossing[v] = d.is_crossing(v);
    for (int s = 0; s < d.degree(v); ++s) adj[v].push_back(d.ref(d.mate(d.dart(v, s))));
  }
  auto link = [&](SlotRef a, SlotRef b) {
    adj[a.vertex][a.slot] = b;
    adj[b.vertex][b.slot] = a;
  };
  auto add_crossing = [&]() {
    adj.emplace_back(4, SlotRef{-1, -1});
    crossing.push_back(1);
    return static_cast<int>(adj.size()) - 1;
  };
  const int t = d.tail(), h = d.head();
  adj[t].resize(3, SlotRef{-1, -1});
  adj[h].resize(3, SlotRef{-1, -1});

  // The over arc runs through X crossings, the under arc through Y crossings.
  SlotRef xcur{t, 2}, ycur{t, 1};
  for (Dart x : crossed) {
    const SlotRef a = d.ref(x);
    const SlotRef b = adj[a.vertex][a.slot];
    const int px = add_crossing();  // slots: to a, arc forward, to b, arc back
    const int py = add_crossing();  // slots: arc forward, to b, arc back, to a
    link(a, {py, 3});
    link({py, 1}, {px, 0});
    link({px, 2}, b);
    link(xcur, {px, 3});
    link(ycur, {py, 2});
    xcur = {px, 1};
    ycur = {py, 0};
  }
  link(xcur, {h, 1});
  link(ycur, {h, 2});

  ThetaCurve g;
  g.crossing = crossing;
  g.base.assign(adj.size() + 1, 0);
  for (std::size_t v = 0; v < adj.size(); ++v) g.base[v + 1] = g.base[v] + static_cast<int>(adj[v].size());
  g.mate.resize(g.base.back());
  for (std::size_t v = 0; v < adj.size(); ++v)
    for (std::size_t s = 0; s < adj[v].size(); ++s)
      g.mate[g.base[v] + s] = g.base[adj[v][s].vertex] + adj[v][s].slot;
  return g;
}

}  // namespace knotoid

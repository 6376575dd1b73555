#include "map_builder.hpp"

namespace knotoid::detail {

MapBuilder::MapBuilder(const Diagram& d)
    : kind(d.kinds()), nbr(d.adjacency()), removed(d.vertex_count(), 0) {}

int MapBuilder::add_vertex(VertexKind k, int degree) {
  kind.push_back(k);
  nbr.emplace_back(degree, SlotRef{-1, -1});
  removed.push_back(0);
  return static_cast<int>(kind.size()) - 1;
}

void MapBuilder::link(SlotRef a, SlotRef b) {
  nbr[a.vertex][a.slot] = b;
  nbr[b.vertex][b.slot] = a;
}

int MapBuilder::subdivide(SlotRef a) {
  const SlotRef b = mate(a);
  const int t = add_vertex(VertexKind::Crossing, 2);
  link(a, {t, 0});
  link({t, 1}, b);
  return t;
}

void MapBuilder::splice_out(const std::vector<int>& gone) {
  for (int v : gone) removed[v] = 1;
  auto through = [&](SlotRef r) {
    const int deg = static_cast<int>(nbr[r.vertex].size());
    return SlotRef{r.vertex, deg == 2 ? 1 - r.slot : (r.slot + 2) % 4};
  };
  std::vector<std::pair<SlotRef, SlotRef>> joins;
  for (int v = 0; v < static_cast<int>(nbr.size()); ++v) {
    if (removed[v]) continue;
    for (int s = 0; s < static_cast<int>(nbr[v].size()); ++s) {
      SlotRef cur = nbr[v][s];
      if (!removed[cur.vertex]) continue;
      std::size_t guard = 0;
      while (removed[cur.vertex]) {
        cur = mate(through(cur));
        if (++guard > 4 * nbr.size()) throw std::logic_error("splice did not terminate");
      }
      joins.push_back({{v, s}, cur});
    }
  }
  for (const auto& [a, b] : joins) nbr[a.vertex][a.slot] = b;
}

Diagram MapBuilder::build() const {
  std::vector<int> id(kind.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < kind.size(); ++v)
    if (!removed[v]) id[v] = next++;
  std::vector<VertexKind> kinds;
  std::vector<std::vector<SlotRef>> adj;
  kinds.reserve(next);
  adj.reserve(next);
  for (std::size_t v = 0; v < kind.size(); ++v) {
    if (removed[v]) continue;
    kinds.push_back(kind[v]);
    std::vector<SlotRef> row;
    row.reserve(nbr[v].size());
    for (const SlotRef& r : nbr[v]) row.push_back({id[r.vertex], r.slot});
    adj.push_back(std::move(row));
  }
  return Diagram::from_adjacency(std::move(kinds), adj);
}

}  // namespace knotoid::detail

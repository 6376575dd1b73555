#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "knotoid/enumerate.hpp"

namespace knotoid {

namespace {

std::string read_header(std::istream& in) {
  std::string h;
  char c;
  if (!in.get(c)) return h;
  h += c;
  while (in.get(c)) {
    h += c;
    if (h.size() >= 2 && h.compare(h.size() - 2, 2, "<<") == 0 && h.size() > 2) break;
    if (h.size() > 64) break;
  }
  return h;
}

// Clockwise 1-based neighbour lists of one record into a sphere map. Parallel
// edges are matched in reverse order first (the planar pairing for a plane
// multigraph); other matchings are tried if that one is not genus 0.
std::optional<Diagram> to_map(const std::vector<std::vector<int>>& cw) {
  const int n = static_cast<int>(cw.size());
  std::vector<VertexKind> kinds(n, VertexKind::Crossing);
  int ends = 0;
  for (int v = 0; v < n; ++v) {
    if (cw[v].size() == 1) kinds[v] = ends++ == 0 ? VertexKind::Tail : VertexKind::Head;
  }
  // Counterclockwise slots.
  std::vector<std::vector<int>> ccw(n);
  for (int v = 0; v < n; ++v) ccw[v].assign(cw[v].rbegin(), cw[v].rend());

  // Occurrence lists per unordered vertex pair.
  std::map<std::pair<int, int>, std::pair<std::vector<int>, std::vector<int>>> groups;
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < static_cast<int>(ccw[v].size()); ++s) {
      const int w = ccw[v][s];
      if (w < 0 || w >= n) throw FormatError("planar_code neighbour index out of range");
      auto& g = groups[{std::min(v, w), std::max(v, w)}];
      (v <= w ? g.first : g.second).push_back(s);
    }
  std::vector<std::pair<std::pair<int, int>, std::pair<std::vector<int>, std::vector<int>>>> gs(groups.begin(),
                                                                                             groups.end());
  for (auto& [key, occ] : gs) {
    if (key.first == key.second) {
      if (occ.first.size() % 2 != 0) throw FormatError("planar_code loop occurrences are unpaired");
    } else if (occ.first.size() != occ.second.size()) {
      throw FormatError("planar_code adjacency is not symmetric");
    }
    std::reverse(occ.second.begin(), occ.second.end());
  }

  std::vector<std::vector<SlotRef>> adj(n);
  for (int v = 0; v < n; ++v) adj[v].assign(ccw[v].size(), SlotRef{-1, -1});
  std::optional<Diagram> result;
  std::function<bool(std::size_t)> place = [&](std::size_t gi) -> bool {
    if (gi == gs.size()) {
      try {
        result = Diagram::from_adjacency_unchecked(kinds, adj);
        return true;
      } catch (const InvalidDiagram&) {
        return false;
      }
    }
    const int u = gs[gi].first.first, w = gs[gi].first.second;
    const auto& a = gs[gi].second.first;
    auto b = gs[gi].second.second;
    if (u == w) {
      // Loops: pair occurrences of u among themselves.
      std::vector<int> occ = a;
      std::function<bool(std::vector<int>&)> pair_up = [&](std::vector<int>& rest) -> bool {
        if (rest.empty()) return place(gi + 1);
        const int x = rest.front();
        for (std::size_t k = 1; k < rest.size(); ++k) {
          const int y = rest[k];
          std::vector<int> next;
          for (std::size_t t = 1; t < rest.size(); ++t)
            if (t != k) next.push_back(rest[t]);
          adj[u][x] = {u, y};
          adj[u][y] = {u, x};
          if (pair_up(next)) return true;
        }
        return false;
      };
      return pair_up(occ);
    }
    std::sort(b.begin(), b.end(), std::greater<>());
    std::vector<int> order = b;
    do {
      for (std::size_t k = 0; k < a.size(); ++k) {
        adj[u][a[k]] = {w, order[k]};
        adj[w][order[k]] = {u, a[k]};
      }
      if (place(gi + 1)) return true;
    } while (std::prev_permutation(order.begin(), order.end()));
    return false;
  };
  if (!place(0)) return std::nullopt;
  return result;
}

}  // namespace

PlanarCodeIngest ingest_planar_code(std::istream& in) {
  PlanarCodeIngest out;
  const std::string header = read_header(in);
  if (header.empty()) return out;
  bool big_endian = false;
  if (header == ">>planar_code<<" || header == ">>planar_code le<<") {
    big_endian = false;
  } else if (header == ">>planar_code be<<") {
    big_endian = true;
  } else {
    throw UnsupportedHeader("unsupported planar_code header: " + header);
  }
  auto get_byte = [&](int& value) {
    char c;
    if (!in.get(c)) return false;
    value = static_cast<unsigned char>(c);
    return true;
  };
  for (;;) {
    int first = 0;
    if (!get_byte(first)) break;
    bool wide = first == 0;
    auto get = [&](int& value) {
      if (!wide) return get_byte(value);
      int b0 = 0, b1 = 0;
      if (!get_byte(b0) || !get_byte(b1)) return false;
      value = big_endian ? (b0 << 8) | b1 : (b1 << 8) | b0;
      return true;
    };
    int n = first;
    if (wide && !get(n)) throw FormatError("truncated planar_code record");
    std::vector<std::vector<int>> cw(n);
    for (int v = 0; v < n; ++v) {
      for (;;) {
        int x = 0;
        if (!get(x)) throw FormatError("truncated planar_code record");
        if (x == 0) break;
        if (x > n) throw FormatError("planar_code neighbour index exceeds vertex count");
        cw[v].push_back(x - 1);
      }
    }
    ++out.records;
    int ones = 0;
    bool ok = true;
    for (const auto& l : cw) {
      if (l.size() == 1) {
        ++ones;
      } else if (l.size() != 4) {
        ok = false;
      }
    }
    if (!ok || ones != 2) {
      ++out.filtered;
      continue;
    }
    auto flat = to_map(cw);
    if (!flat) {
      ++out.filtered;
      continue;
    }
    out.shadows.push_back(make_shadow(*flat));
  }
  return out;
}

void write_planar_code(std::ostream& out, const std::vector<std::vector<std::vector<int>>>& graphs) {
  out << ">>planar_code<<";
  for (const auto& g : graphs) {
    if (g.size() > 252) throw std::invalid_argument("write_planar_code supports at most 252 vertices");
    out.put(static_cast<char>(g.size()));
    for (const auto& nbrs : g) {
      for (int w : nbrs) out.put(static_cast<char>(w + 1));
      out.put('\0');
    }
  }
}

}  // namespace knotoid

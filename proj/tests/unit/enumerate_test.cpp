#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "knotoid/enumerate.hpp"
#include "oracles.hpp"

namespace {

using namespace knotoid;

// Distinct decorated diagrams over a shadow, counted by brute force: every
// choice of over-strand per crossing and of which endpoint is the tail.
std::size_t brute_diagrams(const ShadowMap& s) {
  const Diagram& m = s.map;
  const auto adj = m.adjacency();
  const int n = m.vertex_count();
  std::vector<int> crossings;
  for (int v = 0; v < n; ++v)
    if (m.is_crossing(v)) crossings.push_back(v);
  std::set<std::string> seen;
  for (unsigned mask = 0; mask < (1u << crossings.size()); ++mask)
    for (int swap = 0; swap < 2; ++swap) {
      std::vector<int> off(n, 0);
      for (std::size_t i = 0; i < crossings.size(); ++i) off[crossings[i]] = (mask >> i) & 1;
      oracle::Adjacency a(n);
      for (int v = 0; v < n; ++v) {
        a[v].resize(adj[v].size());
        for (std::size_t k = 0; k < adj[v].size(); ++k) {
          const SlotRef r = adj[v][k];
          const int deg = static_cast<int>(adj[r.vertex].size());
          a[v][(static_cast<int>(k) + off[v]) % static_cast<int>(adj[v].size())] = {
              r.vertex, (r.slot + off[r.vertex]) % deg};
        }
      }
      std::vector<VertexKind> kinds = m.kinds();
      if (swap)
        for (VertexKind& k : kinds)
          if (k != VertexKind::Crossing) k = k == VertexKind::Tail ? VertexKind::Head : VertexKind::Tail;
      if (oracle::strand_components(a) != 1) continue;
      seen.insert(oracle::brute_canonical(kinds, a, true));
    }
  return seen.size();
}

std::vector<std::vector<int>> clockwise_lists(const Diagram& m) {
  const auto adj = m.adjacency();
  std::vector<std::vector<int>> out(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v)
    for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it) out[v].push_back(it->vertex);
  return out;
}

TEST(Shadows, MatchBruteForceMatchings) {
  for (int n = 0; n <= 3; ++n) {
    const auto shadows = gen_shadows(n);
    const oracle::ShadowCount expected = oracle::shadows(n);
    EXPECT_EQ(static_cast<int>(shadows.size()), expected.total) << n;
    const auto single = std::count_if(shadows.begin(), shadows.end(), [](const ShadowMap& s) { return s.single_component; });
    EXPECT_EQ(single, expected.single_component) << n;
  }
}

TEST(Shadows, SortedAndDistinct) {
  const auto shadows = gen_shadows(4);
  for (std::size_t i = 1; i < shadows.size(); ++i) EXPECT_LT(shadows[i - 1].code, shadows[i].code);
  for (const ShadowMap& s : shadows) EXPECT_EQ(shadow_code(s.map), s.code);
}

TEST(Shadows, CapIsEnforced) { EXPECT_THROW(gen_shadows(3, 10), SizeCapExceeded); }

TEST(Diagrams, MatchBruteForceAssignment) {
  for (int n = 0; n <= 3; ++n) {
    std::size_t total = 0, expected = 0;
    for (const ShadowMap& s : gen_shadows(n)) {
      const auto ds = assign_crossings(s);
      for (std::size_t i = 1; i < ds.size(); ++i) EXPECT_LT(canonical_code(ds[i - 1]), canonical_code(ds[i]));
      total += ds.size();
      expected += brute_diagrams(s);
    }
    EXPECT_EQ(total, expected) << n;
  }
}

TEST(Diagrams, LinkoidShadowsYieldNothing) {
  int multi = 0;
  for (const ShadowMap& s : gen_shadows(2))
    if (!s.single_component) {
      ++multi;
      EXPECT_TRUE(assign_crossings(s).empty()) << s.code;
    }
  EXPECT_GT(multi, 0);
}

TEST(PlanarCode, RoundTripsShadows) {
  const auto shadows = gen_shadows(3);
  std::vector<std::vector<std::vector<int>>> graphs;
  for (const ShadowMap& s : shadows) graphs.push_back(clockwise_lists(s.map));
  // The tetrahedron has only degree-3 vertices and must be skipped.
  graphs.push_back({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
  std::stringstream buf;
  write_planar_code(buf, graphs);
  const PlanarCodeIngest in = ingest_planar_code(buf);
  EXPECT_EQ(in.records, shadows.size() + 1);
  EXPECT_EQ(in.filtered, 1u);
  std::set<std::string> got, want;
  for (const ShadowMap& s : in.shadows) got.insert(s.code);
  for (const ShadowMap& s : shadows) want.insert(s.code);
  EXPECT_EQ(got, want);
}

TEST(PlanarCode, EmptyAndMalformedInput) {
  std::stringstream empty;
  const PlanarCodeIngest e = ingest_planar_code(empty);
  EXPECT_EQ(e.records, 0u);
  EXPECT_TRUE(e.shadows.empty());

  std::stringstream header_only(">>planar_code<<");
  EXPECT_EQ(ingest_planar_code(header_only).records, 0u);

  std::stringstream bad(">>graph6<<");
  EXPECT_THROW(ingest_planar_code(bad), UnsupportedHeader);

  std::stringstream truncated(std::string(">>planar_code<<") + '\x03' + '\x02' + '\0');
  EXPECT_THROW(ingest_planar_code(truncated), FormatError);

  std::stringstream out_of_range(std::string(">>planar_code<<") + '\x02' + '\x05' + '\0' + '\x01' + '\0');
  EXPECT_THROW(ingest_planar_code(out_of_range), FormatError);
}

}  // namespace

#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "knotoid/enumerate.hpp"
#include "knotoid/structure.hpp"
#include "oracles.hpp"

namespace {

using namespace knotoid;
using testing_support::diagram;
using testing_support::diagrams_up_to;

const char* const kK32Pd = "[0],[0,1,2,3],[1,4,5,2],[3,5,6,4],[6]";
const char* const kK32Em = "B0,A0C0C3D0,B1D3D1B2,B3C2E0C1,D2";

std::vector<Diagram> generated_up_to(int n) {
  std::vector<Diagram> out;
  for (int k = 0; k <= n; ++k)
    for (const ShadowMap& s : gen_shadows(k))
      for (Diagram& d : assign_crossings(s)) out.push_back(std::move(d));
  return out;
}

TEST(Diagram, TrivialIsValid) {
  const Diagram d = Diagram::trivial();
  EXPECT_NO_THROW(validate(d));
  EXPECT_EQ(d.crossing_count(), 0);
  EXPECT_EQ(faces(d).size(), 1u);
  EXPECT_EQ(writhe(d), 0);
  EXPECT_TRUE(is_knot_like(d));
}

TEST(Diagram, K32FromPd) {
  const Diagram d = parse_pd(kK32Pd);
  EXPECT_NO_THROW(validate(d));
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(faces(d).size(), 4u);
}

TEST(Diagram, LinkoidIsRejected) {
  // One crossing whose over-strand closes on itself.
  const std::vector<std::vector<SlotRef>> adj{{{1, 0}}, {{0, 0}, {1, 3}, {2, 0}, {1, 1}}, {{1, 2}}};
  EXPECT_EQ(oracle::strand_components(adj), 2);
  try {
    Diagram::from_adjacency({VertexKind::Tail, VertexKind::Crossing, VertexKind::Head}, adj);
    FAIL() << "linkoid accepted";
  } catch (const InvalidDiagram& e) {
    EXPECT_EQ(e.fault(), DiagramFault::MultiComponent);
  }
}

TEST(Diagram, BadDegreesAndDisconnection) {
  // Two endpoints joined, plus a crossing forming two loops by itself.
  const std::vector<std::vector<SlotRef>> adj{{{1, 0}}, {{0, 0}}, {{2, 1}, {2, 0}, {2, 3}, {2, 2}}};
  EXPECT_THROW(Diagram::from_adjacency({VertexKind::Tail, VertexKind::Head, VertexKind::Crossing}, adj),
               InvalidDiagram);
  EXPECT_THROW(parse_pd("[0],[0,1,1],[2]"), std::exception);
}

TEST(Diagram, FacesCountForAllFixtures) {
  for (const Diagram& d : diagrams_up_to(7)) {
    EXPECT_EQ(static_cast<int>(faces(d).size()), d.crossing_count() + 1);
    EXPECT_EQ(oracle::face_count(d.adjacency()), d.crossing_count() + 1);
    const int v = d.vertex_count(), e = d.edge_count(), f = static_cast<int>(faces(d).size());
    EXPECT_EQ(v - e + f, 2);
  }
}

TEST(Codes, K32RoundTrips) {
  const Diagram d = parse_em(kK32Em);
  EXPECT_EQ(print_em(d), kK32Em);
  EXPECT_EQ(print_pd(parse_pd(kK32Pd)), kK32Pd);
  EXPECT_EQ(canonical_code(parse_pd(kK32Pd)), canonical_code(d));
  EXPECT_EQ(print_em(parse_em("(B0, A0)")), "B0,A0");
  EXPECT_EQ(print_em(parse_em("(B0, A0C0C3D0, B1D3D1B2, B3C2E0C1, D2)")), kK32Em);
  EXPECT_EQ(print_em_pretty(d), "(B0, A0C0C3D0, B1D3D1B2, B3C2E0C1, D2)");
}

TEST(Codes, SyntaxErrorsCarryPosition) {
  try {
    parse_pd("[0],[0,1,2");
    FAIL() << "accepted";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
  EXPECT_THROW(parse_em("B0,A0C0C3D0,B1D3D1B2,B3C2E0C1,D3"), InconsistentCode);
  EXPECT_THROW(parse_pd("[0],[0,1,2,3],[1,4,5,2],[3,5,6,4],[7]"), InconsistentCode);
  EXPECT_THROW(parse_code(""), SyntaxError);
}

TEST(Codes, RoundTripsOverGeneratedDiagrams) {
  for (const Diagram& d : generated_up_to(4)) {
    const CanonicalCode c = canonical_code(d);
    EXPECT_EQ(canonical_code(parse_em(print_em(d))), c);
    EXPECT_EQ(canonical_code(parse_pd(print_pd(d))), c);
  }
}

TEST(Codes, RelabeledDiagramsRoundTrip) {
  // Relabeling may put the head before the tail; the printers must still
  // list the tail first.
  std::mt19937 rng(11);
  for (const Diagram& d : generated_up_to(3))
    for (int i = 0; i < 5; ++i) {
      const Diagram r = testing_support::random_relabel(d, rng);
      const CanonicalCode c = canonical_code(d);
      EXPECT_EQ(canonical_code(parse_em(print_em(r))), c) << print_em(r);
      EXPECT_EQ(canonical_code(parse_pd(print_pd(r))), c) << print_pd(r);
      EXPECT_EQ(canonical_code(parse_em(print_em_pretty(r))), c);
    }
}

TEST(Canonical, TrivialCode) { EXPECT_EQ(canonical_code(Diagram::trivial()), "B0,A0"); }

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(7);
  const Diagram d = parse_pd(kK32Pd);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(canonical_code(testing_support::random_relabel(d, rng)), canonical_code(d));
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  // Equal codes exactly when the brute-force oracle finds an isomorphism.
  const auto ds = diagrams_up_to(4);
  std::vector<Diagram> all;
  for (const Diagram& d : ds) {
    all.push_back(d);
    all.push_back(rotate(d));
    all.push_back(mirror(d));
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      const bool same_code = canonical_code(all[i]) == canonical_code(all[j]);
      const bool iso = oracle::brute_canonical(all[i].kinds(), all[i].adjacency(), true) ==
                       oracle::brute_canonical(all[j].kinds(), all[j].adjacency(), true);
      EXPECT_EQ(same_code, iso) << print_em(all[i]) << " vs " << print_em(all[j]);
    }
}

TEST(Canonical, RotationOfK21HasAnotherCode) {
  const Diagram d = diagram("K2_1");
  const Diagram r = rotate(d);
  EXPECT_NE(oracle::brute_canonical(d.kinds(), d.adjacency(), true),
            oracle::brute_canonical(r.kinds(), r.adjacency(), true));
  EXPECT_NE(canonical_code(r), canonical_code(d));
}

TEST(Strand, CoversEveryEdgeOnce) {
  for (const Diagram& d : diagrams_up_to(6)) {
    const auto s = strand(d);
    EXPECT_EQ(static_cast<int>(s.size()), d.dart_count());
    std::vector<int> seen(d.dart_count(), 0);
    for (Dart x : s) ++seen[x];
    for (int c : seen) EXPECT_EQ(c, 1);
    EXPECT_EQ(static_cast<int>(strand_passes(d).size()), 2 * d.crossing_count() + 2);
    EXPECT_EQ(oracle::strand_components(d.adjacency()), 1);
  }
}

TEST(Writhe, K21MatchesHandTraversal) {
  // Traced by hand on the appendix PD code: both crossings are positive.
  EXPECT_EQ(writhe(diagram("K2_1")), 2);
  EXPECT_EQ(oracle::pd_writhe(testing_support::entry("K2_1").pd), 2);
}

TEST(Writhe, MatchesPdTraversalOracle) {
  for (const auto& e : testing_support::appendix())
    if (e.crossings <= 6) {
      EXPECT_EQ(writhe(parse_pd(e.pd)), oracle::pd_writhe(e.pd)) << e.name;
    }
}

TEST(Writhe, MirrorNegatesRotationKeeps) {
  // Rotation reflects the picture and exchanges over and under; the two sign
  // changes cancel.
  for (const Diagram& d : generated_up_to(3)) {
    EXPECT_EQ(writhe(mirror(d)), -writhe(d));
    EXPECT_EQ(writhe(rotate(d)), writhe(d));
    EXPECT_EQ(writhe(reverse(d)), writhe(d));
  }
}

TEST(KnotLike, Examples) {
  EXPECT_TRUE(is_knot_like(diagram("K4_1")));
  EXPECT_FALSE(is_knot_like(diagram("K2_1")));
  // Oracle: the two endpoint darts lie on one face walk exactly when knot-like.
  for (const Diagram& d : diagrams_up_to(5)) {
    const auto f = face_of_darts(d);
    EXPECT_EQ(is_knot_like(d), f[d.tail_dart()] == f[d.head_dart()]);
  }
}

}  // namespace

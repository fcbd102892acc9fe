#include "cospectra/cospectrality.hpp"

#include <gtest/gtest.h>

#include "cospectra/fixtures.hpp"
#include "cospectra/orbits.hpp"
#include "support.hpp"

namespace cospectra {
namespace {

TEST(VerifyATest, SchwenkTree) {
  const CospectralityReport r = verify_a_cospectral(load_fixture("figure1").graph, 3, 6);
  EXPECT_TRUE(r.cospectral);
  ASSERT_TRUE(r.char_poly_equal.has_value());
  EXPECT_TRUE(*r.char_poly_equal);
  EXPECT_EQ(*r.deleted_u_char_poly, *r.deleted_v_char_poly);
  EXPECT_EQ(r.projection_equal, true);
}

TEST(VerifyATest, Figure4AndP3) {
  EXPECT_TRUE(verify_a_cospectral(load_fixture("figure4").graph, 0, 3).cospectral);
  const CospectralityReport p3 = verify_a_cospectral(path_graph(3), 0, 1);
  EXPECT_FALSE(p3.cospectral);
  EXPECT_EQ(p3.krylov.first_failing_k, 2u);
  EXPECT_EQ(p3.power_diagonal->first_failing_k, 2u);
  EXPECT_THROW(verify_a_cospectral(path_graph(3), 1, 1), std::invalid_argument);
  EXPECT_THROW(verify_a_cospectral(path_graph(3), 0, 3), std::out_of_range);
}

TEST(VerifyLTest, Examples) {
  const ConstructedGraph cg = build_l_cospectral(star_graph(3), 1, {{2, 2}, {2, 3}});
  const CospectralityReport claw = verify_l_cospectral(cg.graph, 1, 5);
  EXPECT_TRUE(claw.cospectral);
  EXPECT_FALSE(claw.char_poly_equal.has_value());
  EXPECT_FALSE(claw.notes.empty());
  EXPECT_TRUE(verify_l_cospectral(path_graph(4), 0, 3).cospectral);
  EXPECT_FALSE(verify_l_cospectral(path_graph(3), 0, 1).cospectral);
}

TEST(VerifyFullTest, Examples) {
  const FullReport c4 = verify_pair_full(cycle_graph(4), 0, 2);
  EXPECT_TRUE(c4.adjacency.cospectral);
  EXPECT_TRUE(c4.laplacian.cospectral);
  EXPECT_EQ(c4.strong.verdict, StrongVerdict::strong);

  const FullReport tree = verify_pair_full(load_fixture("figure1").graph, 3, 6);
  EXPECT_TRUE(tree.adjacency.cospectral);
  EXPECT_EQ(tree.strong.verdict, check_strong_cospectrality(load_fixture("figure1").graph, 3, 6).verdict);

  const FullReport p3 = verify_pair_full(path_graph(3), 0, 1);
  EXPECT_FALSE(p3.adjacency.cospectral);
  EXPECT_FALSE(p3.laplacian.cospectral);
  EXPECT_EQ(p3.strong.verdict, StrongVerdict::not_cospectral);
}

TEST(CospectralityPropertyTest, CriteriaAgreeOnSmallGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto rng = testing::rng_for(seed);
    const Graph g = testing::gen_connected(rng, 2, 8);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        // verify_a_cospectral throws if the exact criteria disagree.
        const CospectralityReport r = verify_a_cospectral(g, u, v);
        ASSERT_TRUE(r.projection_equal.has_value());
        EXPECT_EQ(*r.projection_equal, r.cospectral) << "seed " << seed << " pair " << u << "," << v;
      }
    }
  }
}

TEST(CospectralityPropertyTest, AutomorphicPairsAreCospectral) {
  for (const char* name : {"figure3", "figure4", "figure6-a"}) {
    const Graph g = load_fixture(name).graph;
    const OrbitPartition p = automorphism_orbits(g);
    for (const auto& orbit : p.orbits) {
      for (std::size_t i = 1; i < orbit.size(); ++i) {
        EXPECT_TRUE(verify_a_cospectral(g, orbit[0], orbit[i]).cospectral) << name;
        EXPECT_TRUE(verify_l_cospectral(g, orbit[0], orbit[i]).cospectral) << name;
      }
    }
  }
}

}  // namespace
}  // namespace cospectra

#include "cospectra/spectral.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "cospectra/fixtures.hpp"
#include "cospectra/jacobi.hpp"
#include "cospectra/orbits.hpp"
#include "support.hpp"

namespace cospectra {
namespace {

TEST(JacobiTest, MatchesSelfAdjointSolver) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto rng = testing::rng_for(seed);
    const Eigen::Index n = static_cast<Eigen::Index>(1 + seed % 15);
    Eigen::MatrixXd m(n, n);
    std::normal_distribution<double> normal;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = normal(rng);
    }
    const JacobiEigenSolver<Eigen::MatrixXd> jacobi(m);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oracle(m);
    const Eigen::VectorXd expected = oracle.eigenvalues().reverse();
    EXPECT_LE((jacobi.eigenvalues() - expected).norm(), 1e-10 * std::max(1.0, m.norm())) << "seed " << seed;
    const Eigen::MatrixXd& v = jacobi.eigenvectors();
    EXPECT_LE((v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-12 * static_cast<double>(n));
    EXPECT_LE((m * v - v * jacobi.eigenvalues().asDiagonal()).norm(), 1e-10 * std::max(1.0, m.norm()));
  }
}

TEST(JacobiTest, RejectsNonSquare) {
  JacobiEigenSolver<Eigen::MatrixXd> solver;
  EXPECT_THROW(solver.compute(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
}

TEST(SpectralTest, CompleteGraphs) {
  const SpectralDecomposition k2 = eigendecompose_symmetric(adjacency_matrix(complete_graph(2)));
  ASSERT_EQ(k2.clusters.size(), 2u);
  EXPECT_NEAR(k2.clusters[0].eigenvalue, 1.0, 1e-12);
  EXPECT_NEAR(k2.clusters[1].eigenvalue, -1.0, 1e-12);
  EXPECT_LE((k2.clusters[0].projector - Eigen::MatrixXd::Constant(2, 2, 0.5)).norm(), 1e-12);

  const SpectralDecomposition k3 = eigendecompose_symmetric(adjacency_matrix(complete_graph(3)));
  ASSERT_EQ(k3.clusters.size(), 2u);
  EXPECT_NEAR(k3.clusters[0].eigenvalue, 2.0, 1e-12);
  EXPECT_EQ(k3.clusters[0].multiplicity, 1u);
  EXPECT_NEAR(k3.clusters[1].eigenvalue, -1.0, 1e-12);
  EXPECT_EQ(k3.clusters[1].multiplicity, 2u);
}

TEST(SpectralTest, Claw) {
  const SpectralDecomposition d = eigendecompose_symmetric(adjacency_matrix(star_graph(3)));
  ASSERT_EQ(d.clusters.size(), 3u);
  const double expected[] = {std::sqrt(3.0), 0.0, -std::sqrt(3.0)};
  const unsigned mult[] = {1, 2, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(d.clusters[i].eigenvalue, expected[i], 1e-12);
    EXPECT_EQ(d.clusters[i].multiplicity, mult[i]);
  }
  EXPECT_NE(d.find(0.0, 1e-8), nullptr);
  EXPECT_EQ(d.find(1.0, 1e-8), nullptr);
}

TEST(SpectralTest, RequiresMatchingCharPoly) {
  const IntMatrix a = adjacency_matrix(complete_graph(3));
  EXPECT_THROW(eigendecompose_symmetric(a, char_poly(adjacency_matrix(path_graph(3)))), ClusteringError);
  IntMatrix asym = a;
  asym(0, 1) = 0;
  EXPECT_THROW(eigendecompose_symmetric(asym, char_poly(a)), std::invalid_argument);
}

TEST(SpectralTest, ProjectionDiagonalExamples) {
  const SpectralDecomposition tree = eigendecompose_symmetric(adjacency_matrix(load_fixture("figure1").graph));
  EXPECT_TRUE(projection_diagonal_equal(tree, 3, 6, 1e-8));
  const SpectralDecomposition p3 = eigendecompose_symmetric(adjacency_matrix(path_graph(3)));
  EXPECT_FALSE(projection_diagonal_equal(p3, 0, 1, 1e-8));
  EXPECT_TRUE(projection_diagonal_equal(p3, 1, 1, 1e-8));
  EXPECT_THROW(projection_diagonal_equal(p3, 0, 3, 1e-8), std::out_of_range);
}

TEST(SpectralTest, StrongCospectralityExamples) {
  const StrongCospectralityResult k2 = check_strong_cospectrality(complete_graph(2), 0, 1);
  EXPECT_EQ(k2.verdict, StrongVerdict::strong);
  EXPECT_EQ(k2.signs, (std::vector<ProjectionSign>{ProjectionSign::plus, ProjectionSign::minus}));

  EXPECT_EQ(check_strong_cospectrality(cycle_graph(4), 0, 2).verdict, StrongVerdict::strong);
  const StrongCospectralityResult c4 = check_strong_cospectrality(cycle_graph(4), 0, 1);
  EXPECT_EQ(c4.verdict, StrongVerdict::cospectral_only);
  // Eigenvalues 2, 0, -2: only the 0 eigenspace breaks the sign condition.
  EXPECT_EQ(c4.signs, (std::vector<ProjectionSign>{ProjectionSign::plus, ProjectionSign::neither,
                                                   ProjectionSign::minus}));

  EXPECT_EQ(check_strong_cospectrality(path_graph(3), 0, 1).verdict, StrongVerdict::not_cospectral);
  EXPECT_THROW(check_strong_cospectrality(path_graph(3), 1, 1), std::invalid_argument);
}

TEST(SpectralTest, C4ZeroProjectionsByHand) {
  const SpectralDecomposition d = eigendecompose_symmetric(adjacency_matrix(cycle_graph(4)));
  const SpectralCluster* zero = d.find(0.0, 1e-8);
  ASSERT_NE(zero, nullptr);
  const Eigen::Vector4d e0(0.5, 0.0, -0.5, 0.0);
  EXPECT_LE((zero->projector.col(0) - e0).norm(), 1e-12);
  EXPECT_LE((zero->projector.col(2) + e0).norm(), 1e-12);
}

TEST(PendantTest, ClawAtZero) {
  const auto [grown, report] = attach_pendant_reduce(star_graph(3), 0.0, Eigen::Vector4d(0, 1, -1, 0));
  EXPECT_EQ(grown.order(), 5u);
  EXPECT_EQ(report.attached_to, 1u);
  EXPECT_EQ(report.multiplicity_before, 2u);
  EXPECT_EQ(report.multiplicity_after, 1u);
  EXPECT_TRUE(report.interlacing_strict);
}

TEST(PendantTest, CycleAtZero) {
  const auto [grown, report] = attach_pendant_reduce(cycle_graph(4), 0.0, Eigen::Vector4d(1, 0, -1, 0));
  EXPECT_EQ(report.attached_to, 0u);
  EXPECT_EQ(report.multiplicity_after, 1u);
  EXPECT_EQ(multiplicity_structure(char_poly(adjacency_matrix(grown))).multiplicity_near(0.0, 1e-8), 1u);
}

TEST(PendantTest, StarAtZeroChoosesLeaf) {
  const auto [grown, report] = attach_pendant_reduce(star_graph(4), 0.0);
  EXPECT_NE(report.attached_to, 0u);
  EXPECT_EQ(report.multiplicity_before, 3u);
  EXPECT_EQ(report.multiplicity_after, 2u);
  EXPECT_TRUE(report.interlacing_strict);
}

TEST(PendantTest, Errors) {
  EXPECT_THROW(attach_pendant_reduce(complete_graph(2), 1.0), std::invalid_argument);
  EXPECT_THROW(attach_pendant_reduce(star_graph(3), 0.5), std::invalid_argument);
  EXPECT_THROW(attach_pendant_reduce(star_graph(3), 0.0, Eigen::Vector4d(1, 0, 0, 0)), std::invalid_argument);
}

TEST(SpectralPropertyTest, ProjectorAlgebra) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto rng = testing::rng_for(seed);
    const Graph g = testing::gen_graph(rng, 1 + seed % 14, 0.35);
    for (const IntMatrix& m : {adjacency_matrix(g), laplacian_matrix(g)}) {
      const Tolerances tol;
      const SpectralDecomposition d = eigendecompose_symmetric(m, tol);
      const auto n = static_cast<Eigen::Index>(g.order());
      const double id_tol = tol.identity_tol(g.order());
      Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
      Eigen::MatrixXd weighted = Eigen::MatrixXd::Zero(n, n);
      unsigned total = 0;
      for (std::size_t i = 0; i < d.clusters.size(); ++i) {
        const auto& e = d.clusters[i].projector;
        EXPECT_LE((e * e - e).norm(), id_tol);
        for (std::size_t j = i + 1; j < d.clusters.size(); ++j) EXPECT_LE((e * d.clusters[j].projector).norm(), id_tol);
        sum += e;
        weighted += d.clusters[i].eigenvalue * e;
        total += d.clusters[i].multiplicity;
        if (i > 0) EXPECT_GT(d.clusters[i - 1].eigenvalue, d.clusters[i].eigenvalue);
      }
      EXPECT_EQ(total, g.order());
      EXPECT_LE((sum - Eigen::MatrixXd::Identity(n, n)).norm(), id_tol);
      EXPECT_LE((weighted - d.matrix).norm(), id_tol * std::max(1.0, d.matrix.norm()));
    }
  }
}

TEST(SpectralPropertyTest, ProjectedVectorIsConstantOnOrbits) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto rng = testing::rng_for(seed);
    const Graph g = testing::gen_connected(rng, 2, 10);
    const Tolerances tol;
    const SpectralDecomposition d = eigendecompose_symmetric(adjacency_matrix(g), tol);
    const double res_tol = tol.residual_tol(d.matrix.norm());
    for (Vertex v = 0; v < g.order(); ++v) {
      const OrbitPartition p = automorphism_orbits(g, v);
      for (const auto& c : d.clusters) {
        const Eigen::VectorXd w = c.projector.col(static_cast<Eigen::Index>(v));
        if (w.norm() <= tol.coefficient) continue;
        for (const auto& orbit : p.orbits) {
          for (Vertex u : orbit) {
            EXPECT_NEAR(w(static_cast<Eigen::Index>(u)), w(static_cast<Eigen::Index>(orbit.front())), res_tol)
                << "seed " << seed;
          }
        }
      }
    }
  }
}

TEST(SpectralPropertyTest, PendantAlwaysReducesByOne) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200 && checked < 40; ++seed) {
    auto rng = testing::rng_for(seed);
    const Graph g = testing::gen_connected(rng, 3, 10);
    const SpectralDecomposition d = eigendecompose_symmetric(adjacency_matrix(g));
    for (const auto& c : d.clusters) {
      if (c.multiplicity < 2) continue;
      const auto [grown, report] = attach_pendant_reduce(g, c.eigenvalue);
      EXPECT_EQ(report.multiplicity_after + 1, report.multiplicity_before) << "seed " << seed;
      EXPECT_TRUE(report.interlacing_strict) << "seed " << seed;
      ++checked;
    }
  }
  EXPECT_GE(checked, 10);
}

}  // namespace
}  // namespace cospectra

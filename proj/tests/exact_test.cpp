#include "cospectra/exact.hpp"

#include <gtest/gtest.h>

#include "cospectra/fixtures.hpp"
#include "support.hpp"

namespace cospectra {
namespace {

IntPolynomial poly(std::initializer_list<long> low_first) {
  std::vector<BigInt> c;
  for (long x : low_first) c.emplace_back(x);
  return IntPolynomial(std::move(c));
}

TEST(PolynomialTest, ArithmeticAndFormatting) {
  const IntPolynomial p = poly({-2, -3, 0, 1});
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(to_string(p), "t^3 - 3t - 2");
  EXPECT_EQ(to_string(IntPolynomial()), "0");
  EXPECT_EQ(poly({1, 1}) * poly({-1, 1}), poly({-1, 0, 1}));
  EXPECT_EQ(p.derivative(), poly({-3, 0, 3}));
  EXPECT_EQ(p.evaluate(BigInt(2)), 0);
  EXPECT_EQ(pow(poly({1, 1}), 3), poly({1, 3, 3, 1}));
}

TEST(PolynomialTest, DivisionAndGcd) {
  const RationalPolynomial a = to_rational(poly({-2, -3, 0, 1}));  // (t-2)(t+1)^2
  const RationalPolynomial b = to_rational(poly({1, 2, 1}));       // (t+1)^2
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, to_rational(poly({-2, 1})));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, a.derivative()), to_rational(poly({1, 1})));
  EXPECT_THROW(exact_divide(a, to_rational(poly({1, 2}))), std::domain_error);
  EXPECT_EQ(primitive_part(to_rational(poly({-4, 0, 2}))), poly({-2, 0, 1}));
}

TEST(ExactTest, CharPolyExamples) {
  EXPECT_EQ(char_poly(adjacency_matrix(complete_graph(2))), poly({-1, 0, 1}));
  EXPECT_EQ(char_poly(adjacency_matrix(complete_graph(3))), poly({-2, -3, 0, 1}));
  EXPECT_EQ(char_poly(laplacian_matrix(path_graph(3))), poly({0, 3, -4, 1}));
  EXPECT_EQ(char_poly(adjacency_matrix(star_graph(3))), poly({0, 0, -3, 0, 1}));
  EXPECT_EQ(char_poly(IntMatrix(0, 0)), poly({1}));
}

TEST(ExactTest, SchwenkDeletedCharPolys) {
  // Frozen from the Faddeev-LeVerrier oracle.
  const Graph tree = load_fixture("figure1").graph;
  const IntPolynomial expected = poly({0, 0, -4, 0, 10, 0, -6, 0, 1});
  for (Vertex v : {Vertex{3}, Vertex{6}}) {
    const IntMatrix a = adjacency_matrix(delete_vertex(tree, v));
    EXPECT_EQ(testing::leverrier_char_poly(a), expected);
    EXPECT_EQ(char_poly(a), expected);
  }
}

TEST(ExactTest, PowerDiagonalExamples) {
  EXPECT_TRUE(power_diagonal_equal(adjacency_matrix(load_fixture("figure1").graph), 3, 6));
  const IntMatrix p3 = adjacency_matrix(path_graph(3));
  EXPECT_TRUE(power_diagonal_equal(p3, 0, 2));
  const SequenceCheck check = power_diagonal_check(p3, 0, 1);
  EXPECT_FALSE(check.holds);
  EXPECT_EQ(check.first_failing_k, 2u);
  EXPECT_THROW(power_diagonal_equal(p3, 0, 3), std::out_of_range);
}

TEST(ExactTest, KrylovExamples) {
  const Fixture f = load_fixture("figure3");
  EXPECT_TRUE(krylov_orthogonal(adjacency_matrix(f.graph), 0, 4));
  const ConstructedGraph l = build_l_cospectral(star_graph(3), 1, {{2, 2}, {2, 3}});
  EXPECT_TRUE(krylov_orthogonal(laplacian_matrix(l.graph), 1, 5));
  EXPECT_TRUE(testing::gram_krylov_orthogonal(laplacian_matrix(l.graph), 1, 5));
  EXPECT_FALSE(krylov_orthogonal(adjacency_matrix(path_graph(3)), 0, 1));
  EXPECT_THROW(krylov_orthogonal(adjacency_matrix(path_graph(3)), 1, 1), std::invalid_argument);
}

TEST(ExactTest, PowerVectorExamples) {
  const IntMatrix k2 = adjacency_matrix(complete_graph(2));
  EXPECT_EQ(power_vector(k2, basis_vector<BigInt>(2, 0), 1), basis_vector<BigInt>(2, 1));
  const IntVector x = basis_vector<BigInt>(3, 0) - basis_vector<BigInt>(3, 2);
  EXPECT_EQ(power_vector(adjacency_matrix(path_graph(3)), x, 0), x);
  EXPECT_EQ(power_vector(adjacency_matrix(path_graph(3)), x, 1), IntVector::Zero(3));
  EXPECT_THROW(power_vector(k2, basis_vector<BigInt>(3, 0), 1), std::invalid_argument);
}

TEST(ExactTest, MultiplicityStructureExamples) {
  const auto k3 = multiplicity_structure(poly({-2, -3, 0, 1}));
  ASSERT_EQ(k3.factors.size(), 2u);
  EXPECT_EQ(k3.factors[0].factor, poly({-2, 1}));
  EXPECT_EQ(k3.factors[0].multiplicity, 1u);
  EXPECT_EQ(k3.factors[1].factor, poly({1, 1}));
  EXPECT_EQ(k3.factors[1].multiplicity, 2u);

  const auto claw = multiplicity_structure(poly({0, 0, -3, 0, 1}));
  ASSERT_EQ(claw.factors.size(), 2u);
  EXPECT_EQ(claw.factors[0].factor, poly({-3, 0, 1}));
  EXPECT_EQ(claw.factors[0].multiplicity, 1u);
  EXPECT_EQ(claw.factors[1].factor, poly({0, 1}));
  EXPECT_EQ(claw.factors[1].multiplicity, 2u);
  EXPECT_EQ(claw.multiplicity_near(std::sqrt(3.0), 1e-8), 1u);
  EXPECT_EQ(claw.multiplicity_near(0.0, 1e-8), 2u);
  EXPECT_EQ(claw.multiplicity_near(1.0, 1e-8), 0u);

  const auto square = multiplicity_structure(poly({0, 0, 1}));
  ASSERT_EQ(square.factors.size(), 1u);
  EXPECT_EQ(square.factors[0].factor, poly({0, 1}));
  EXPECT_EQ(square.factors[0].multiplicity, 2u);
  EXPECT_THROW(multiplicity_structure(IntPolynomial()), std::invalid_argument);
}

TEST(ExactPropertyTest, BareissMatchesPermutationExpansion) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto rng = testing::rng_for(seed);
    const Eigen::Index n = static_cast<Eigen::Index>(1 + seed % 7);
    IntMatrix m(n, n);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = (seed % 3 == 0 && entry(rng) > 0) ? 0 : entry(rng);
    }
    EXPECT_EQ(bareiss_determinant(m), testing::permutation_determinant(m)) << "seed " << seed;
  }
}

TEST(ExactPropertyTest, CharPolyMatchesLeverrier) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto rng = testing::rng_for(seed);
    const Graph g = testing::gen_graph(rng, 1 + seed % 12, 0.4);
    const IntMatrix a = adjacency_matrix(g);
    const IntMatrix l = laplacian_matrix(g);
    const IntPolynomial pa = char_poly(a);
    EXPECT_EQ(pa, testing::leverrier_char_poly(a)) << "seed " << seed;
    EXPECT_EQ(char_poly(l), testing::leverrier_char_poly(l)) << "seed " << seed;
    EXPECT_EQ(pa.leading(), 1);
    EXPECT_EQ(pa.degree(), static_cast<long>(g.order()));
  }
}

TEST(ExactPropertyTest, SquarefreeDecompositionReassembles) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto rng = testing::rng_for(seed);
    const Graph g = testing::gen_graph(rng, 1 + seed % 12, 0.3);
    const IntPolynomial p = char_poly(adjacency_matrix(g));
    const MultiplicityStructure s = multiplicity_structure(p);
    EXPECT_EQ(s.expand(), p) << "seed " << seed;
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
      const RationalPolynomial f = to_rational(s.factors[i].factor);
      EXPECT_EQ(gcd(f, f.derivative()).degree(), 0) << "factor not squarefree, seed " << seed;
      for (std::size_t j = i + 1; j < s.factors.size(); ++j) {
        EXPECT_EQ(gcd(f, to_rational(s.factors[j].factor)).degree(), 0) << "factors share a root, seed " << seed;
      }
    }
  }
}

TEST(ExactPropertyTest, KrylovMatchesGramOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto rng = testing::rng_for(seed);
    const Graph g = testing::gen_connected(rng, 2, 8);
    const IntMatrix a = adjacency_matrix(g);
    const IntMatrix l = laplacian_matrix(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        EXPECT_EQ(krylov_orthogonal(a, u, v), testing::gram_krylov_orthogonal(a, u, v));
        EXPECT_EQ(krylov_orthogonal(l, u, v), testing::gram_krylov_orthogonal(l, u, v));
      }
    }
  }
}

}  // namespace
}  // namespace cospectra

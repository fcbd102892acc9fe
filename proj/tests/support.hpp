#pragma once

// Seeded generators and independent oracles shared by the test suites.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cospectra/constructions.hpp"
#include "cospectra/exact.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/polynomial.hpp"

namespace cospectra::testing {

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + 1); }

/// Random graph on n vertices that may be disconnected.
inline Graph gen_graph(std::mt19937_64& rng, std::size_t n, double p) { return random_graph(rng, n, p); }

/// Connected graph with n drawn from [lo, hi].
inline Graph gen_connected(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
  return random_connected_graph(rng, n, p);
}

/// Determinant by full permutation expansion; n <= 8.
inline BigInt permutation_determinant(const IntMatrix& m) {
  const std::size_t n = static_cast<std::size_t>(m.rows());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    BigInt term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i]));
    total += inversions % 2 ? BigInt(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence over Q.
inline IntPolynomial leverrier_char_poly(const IntMatrix& a) {
  const std::size_t n = static_cast<std::size_t>(a.rows());
  const MatrixX<BigRational> aq = a.cast<BigRational>();
  MatrixX<BigRational> m = MatrixX<BigRational>::Zero(a.rows(), a.cols());
  std::vector<BigInt> coeffs(n + 1);
  coeffs[n] = 1;
  BigRational c = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    MatrixX<BigRational> next = aq * m;
    for (Eigen::Index i = 0; i < a.rows(); ++i) next(i, i) += c;
    m = next;
    const MatrixX<BigRational> am = aq * m;
    BigRational trace = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) trace += am(i, i);
    c = -trace / BigRational(static_cast<long>(k));
    c.canonicalize();
    coeffs[n - k] = c.get_num();
  }
  return IntPolynomial(std::move(coeffs));
}

/// Orbits of Aut(g, fixed) by enumerating every permutation; n <= 8.
inline std::vector<std::vector<Vertex>> brute_force_orbits(const Graph& g, std::optional<Vertex> fixed) {
  const std::size_t n = g.order();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  const auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x];
    return x;
  };
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (fixed && perm[*fixed] != *fixed) continue;
    bool ok = true;
    for (const auto& [u, v] : g.edges()) {
      if (!g.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t a = find(v);
      const std::size_t b = find(perm[v]);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::size_t, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [r, members] : groups) out.push_back(members);
  return out;
}

/// Krylov orthogonality via the Gram matrix of the two Krylov bases:
/// every entry of K_plus^T K_minus must vanish.
inline bool gram_krylov_orthogonal(const IntMatrix& m, Vertex u, Vertex v) {
  const std::size_t n = static_cast<std::size_t>(m.rows());
  const MatrixX<BigRational> mq = m.cast<BigRational>();
  MatrixX<BigRational> plus(m.rows(), m.rows());
  MatrixX<BigRational> minus(m.rows(), m.rows());
  RationalVector p = RationalVector::Zero(m.rows());
  RationalVector q = RationalVector::Zero(m.rows());
  p(static_cast<Eigen::Index>(u)) += 1;
  p(static_cast<Eigen::Index>(v)) += 1;
  q(static_cast<Eigen::Index>(u)) += 1;
  q(static_cast<Eigen::Index>(v)) -= 1;
  for (std::size_t k = 0; k < n; ++k) {
    plus.col(static_cast<Eigen::Index>(k)) = p;
    minus.col(static_cast<Eigen::Index>(k)) = q;
    RationalVector np = mq * p;
    RationalVector nq = mq * q;
    p = np;
    q = nq;
  }
  const MatrixX<BigRational> gram = plus.transpose() * minus;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
      if (gram(i, j) != 0) return false;
    }
  }
  return true;
}

/// Sorted (degree, sorted neighbour degrees) signature; an isomorphism invariant.
inline std::vector<std::pair<std::size_t, std::vector<std::size_t>>> degree_signature(const Graph& g) {
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<std::size_t> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    out.emplace_back(g.degree(v), nd);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cospectra::testing

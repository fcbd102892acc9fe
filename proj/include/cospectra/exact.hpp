#pragma once

// Exact integer/rational linear algebra over graph matrices.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospectra/polynomial.hpp"
#include "cospectra/scalar.hpp"

namespace cospectra {

/// Fraction-free (Bareiss) determinant with row pivoting.
BigInt bareiss_determinant(IntMatrix m);

/// det(tI - m), exact. Evaluated at t = 0..n by Bareiss elimination and
/// recovered by Newton forward-difference interpolation.
IntPolynomial char_poly(const IntMatrix& m);

/// m^k x by repeated multiplication, in the scalar type of x.
template <typename MatDerived, typename VecDerived>
VectorX<typename VecDerived::Scalar> power_vector(const Eigen::MatrixBase<MatDerived>& m,
                                                  const Eigen::MatrixBase<VecDerived>& x, std::size_t k) {
  using Scalar = typename VecDerived::Scalar;
  if (m.rows() != m.cols() || m.cols() != x.size()) {
    throw std::invalid_argument("power_vector: dimension mismatch (" + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " times " + std::to_string(x.size()) + ")");
  }
  const MatrixX<Scalar> ms = m.template cast<Scalar>();
  VectorX<Scalar> out = x;
  for (std::size_t i = 0; i < k; ++i) {
    VectorX<Scalar> next = ms * out;
    out.swap(next);
  }
  return out;
}

/// Outcome of an exact scalar-sequence test; `first_failing_k` is the
/// smallest power at which the sequence is nonzero.
struct SequenceCheck {
  bool holds = true;
  std::optional<std::size_t> first_failing_k;
};

/// (m^k)_uu == (m^k)_vv for k = 0..n-1.
SequenceCheck power_diagonal_check(const IntMatrix& m, Vertex u, Vertex v);
bool power_diagonal_equal(const IntMatrix& m, Vertex u, Vertex v);

/// (e_u + e_v)^T m^k (e_u - e_v) == 0 for k = 0..2n-2, i.e. the Krylov
/// spaces of e_u + e_v and e_u - e_v under symmetric m are orthogonal.
SequenceCheck krylov_check(const IntMatrix& m, Vertex u, Vertex v);
bool krylov_orthogonal(const IntMatrix& m, Vertex u, Vertex v);

struct SquarefreeFactor {
  /// Primitive, squarefree, positive leading coefficient.
  IntPolynomial factor;
  unsigned multiplicity = 0;
};

/// p = unit * prod(factor_i ^ multiplicity_i), factors pairwise coprime.
struct MultiplicityStructure {
  BigInt unit = 1;
  std::vector<SquarefreeFactor> factors;

  IntPolynomial expand() const;

  /// Index of the factor having a root within `tol * max(1, |x|)` of x,
  /// judged by the Newton step |f(x)/f'(x)|; the nearest factor wins.
  std::optional<std::size_t> locate(double x, double tol) const;

  /// Exact multiplicity of the root near x, or 0 when no factor vanishes there.
  unsigned multiplicity_near(double x, double tol) const;

  std::size_t distinct_roots() const;
};

/// Yun's squarefree decomposition over Q.
MultiplicityStructure multiplicity_structure(const IntPolynomial& p);

/// |f(x) / f'(x)| with f evaluated exactly at the dyadic rational x;
/// estimates the distance from x to the nearest root of a squarefree f.
double root_distance_estimate(const IntPolynomial& f, double x);

}  // namespace cospectra

#pragma once

#include <Eigen/Dense>
#include <Eigen/Jacobi>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cospectra {

/// Cyclic Jacobi eigensolver for small dense symmetric matrices.
///
/// Sweeps over all (p, q) pairs in row order, zeroing each off-diagonal
/// entry with a plane rotation, until the off-diagonal Frobenius norm falls
/// below `relative_tolerance * ||A||_F`. Eigenvalues are returned in
/// descending order with matching eigenvector columns.
template <typename MatrixType>
class JacobiEigenSolver {
 public:
  using Scalar = typename MatrixType::Scalar;
  using Index = Eigen::Index;
  using VectorType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using DenseType = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  JacobiEigenSolver() = default;

  explicit JacobiEigenSolver(const MatrixType& a, Scalar relative_tolerance = Scalar(1e-12),
                             int max_sweeps = 100) {
    compute(a, relative_tolerance, max_sweeps);
  }

  JacobiEigenSolver& compute(const MatrixType& a, Scalar relative_tolerance = Scalar(1e-12),
                             int max_sweeps = 100) {
    if (a.rows() != a.cols()) throw std::invalid_argument("JacobiEigenSolver: matrix is not square");
    const Index n = a.rows();
    DenseType work = a;
    DenseType vectors = DenseType::Identity(n, n);
    const Scalar threshold = relative_tolerance * work.norm();
    sweeps_ = 0;
    while (off_diagonal_norm(work) > threshold) {
      if (sweeps_ == max_sweeps) throw std::runtime_error("JacobiEigenSolver: no convergence");
      for (Index p = 0; p < n; ++p) {
        for (Index q = p + 1; q < n; ++q) {
          if (work(p, q) == Scalar(0)) continue;
          Eigen::JacobiRotation<Scalar> rotation;
          rotation.makeJacobi(work, p, q);
          work.applyOnTheLeft(p, q, rotation.adjoint());
          work.applyOnTheRight(p, q, rotation);
          vectors.applyOnTheRight(p, q, rotation);
        }
      }
      ++sweeps_;
    }

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) { return work(i, i) > work(j, j); });
    eigenvalues_.resize(n);
    eigenvectors_.resize(n, n);
    for (Index k = 0; k < n; ++k) {
      eigenvalues_(k) = work(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
      eigenvectors_.col(k) = vectors.col(order[static_cast<std::size_t>(k)]);
    }
    return *this;
  }

  const VectorType& eigenvalues() const { return eigenvalues_; }
  const DenseType& eigenvectors() const { return eigenvectors_; }
  int sweeps() const { return sweeps_; }

 private:
  static Scalar off_diagonal_norm(const DenseType& m) {
    Scalar sum(0);
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = 0; i < m.rows(); ++i) {
        if (i != j) sum += m(i, j) * m(i, j);
      }
    }
    return std::sqrt(sum);
  }

  VectorType eigenvalues_;
  DenseType eigenvectors_;
  int sweeps_ = 0;
};

}  // namespace cospectra

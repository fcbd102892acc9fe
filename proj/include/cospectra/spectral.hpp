#pragma once

// Floating-point spectral decomposition with cluster sizes taken from the
// exact multiplicity structure of the characteristic polynomial.

#include <Eigen/Dense>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cospectra/exact.hpp"
#include "cospectra/graph.hpp"

namespace cospectra {

/// Numeric tolerances. Absolute thresholds are derived per matrix.
struct Tolerances {
  /// tau_id = identity * n: projector algebra.
  double identity = 1e-9;
  /// tau_res = residual * max(1, ||A||_F): eigen-residuals.
  double residual = 1e-8;
  /// tau_c: smallest spectral coefficient treated as nonzero.
  double coefficient = 1e-8;
  /// tau_root: relative Newton-step distance for root membership.
  double root = 1e-8;

  double identity_tol(std::size_t n) const { return identity * static_cast<double>(n); }
  double residual_tol(double frobenius_norm) const { return residual * std::max(1.0, frobenius_norm); }
};

/// Raised when the numeric spectrum cannot be matched to the exact
/// multiplicity structure, or a numeric residual check fails.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClusteringError : public NumericError {
 public:
  using NumericError::NumericError;
};

struct SpectralCluster {
  double eigenvalue = 0.0;
  unsigned multiplicity = 0;
  /// Orthonormal eigenvector columns spanning the eigenspace.
  Eigen::MatrixXd basis;
  /// E = basis * basis^T.
  Eigen::MatrixXd projector;
  /// Index into SpectralDecomposition::structure.factors.
  std::size_t factor_index = 0;
};

struct SpectralDecomposition {
  Eigen::MatrixXd matrix;
  MultiplicityStructure structure;
  /// Sorted by descending eigenvalue.
  std::vector<SpectralCluster> clusters;

  std::size_t order() const { return static_cast<std::size_t>(matrix.rows()); }
  /// Cluster whose eigenvalue lies within tol * max(1, |lambda|) of lambda.
  const SpectralCluster* find(double lambda, double tol) const;
};

/// `char_poly_m` must equal char_poly(m). Throws ClusteringError when the
/// numeric eigenvalues do not split into the exact multiplicities.
SpectralDecomposition eigendecompose_symmetric(const IntMatrix& m, const IntPolynomial& char_poly_m,
                                               const Tolerances& tol = {});
SpectralDecomposition eigendecompose_symmetric(const IntMatrix& m, const Tolerances& tol = {});

/// max over clusters of |(E)_uu - (E)_vv|.
double projection_diagonal_gap(const SpectralDecomposition& d, Vertex u, Vertex v);
bool projection_diagonal_equal(const SpectralDecomposition& d, Vertex u, Vertex v, double tol);

enum class StrongVerdict { strong, cospectral_only, not_cospectral };

/// How E e_u relates to E e_v within one cluster.
enum class ProjectionSign { plus, minus, zero, neither };

struct StrongCospectralityResult {
  StrongVerdict verdict = StrongVerdict::not_cospectral;
  /// Per cluster, in descending eigenvalue order. Empty when not cospectral.
  std::vector<double> eigenvalues;
  std::vector<ProjectionSign> signs;
};

/// E e_u = +-E e_v for every eigenspace of A(g); cospectrality is settled
/// exactly first.
StrongCospectralityResult check_strong_cospectrality(const Graph& g, Vertex u, Vertex v, double tol = 1e-8,
                                                     const Tolerances& tolerances = {});

StrongCospectralityResult strong_cospectrality_from(const SpectralDecomposition& d, Vertex u, Vertex v,
                                                    double tol);

struct PendantReport {
  double eigenvalue = 0.0;
  unsigned multiplicity_before = 0;
  unsigned multiplicity_after = 0;
  Vertex attached_to = 0;
  Vertex pendant = 0;
  /// |y_{attached_to}| of the eigenvector used.
  double component = 0.0;
  /// lambda_j(A_hat) - lambda and lambda - lambda_{j+l}(A_hat), 0-based j
  /// the first index of the cluster in the descending spectrum of A.
  double upper_gap = 0.0;
  double lower_gap = 0.0;
  bool interlacing_strict = false;
};

/// Attaches a pendant vertex to the vertex where some eigenvector of the
/// cluster at `eigenvalue` has its largest component; the multiplicity of
/// that eigenvalue drops by exactly one (checked exactly).
std::pair<Graph, PendantReport> attach_pendant_reduce(const Graph& g, double eigenvalue,
                                                      const Tolerances& tol = {});
/// Same, with a caller-chosen eigenvector of A(g) for `eigenvalue`.
std::pair<Graph, PendantReport> attach_pendant_reduce(const Graph& g, double eigenvalue,
                                                      const Eigen::VectorXd& eigenvector,
                                                      const Tolerances& tol = {});

std::string to_string(StrongVerdict verdict);
std::string to_string(ProjectionSign sign);

}  // namespace cospectra

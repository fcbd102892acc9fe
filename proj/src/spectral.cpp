#include "cospectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cospectra/jacobi.hpp"

namespace cospectra {

namespace {

Eigen::MatrixXd to_double_matrix(const IntMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  }
  return out;
}

void require_symmetric(const IntMatrix& m, const char* op) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(op) + ": matrix is not square");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) throw std::invalid_argument(std::string(op) + ": matrix is not symmetric");
    }
  }
}

/// Full spectrum in descending order, repeating each cluster value.
std::vector<double> flat_spectrum(const SpectralDecomposition& d) {
  std::vector<double> out;
  for (const auto& c : d.clusters) out.insert(out.end(), c.multiplicity, c.eigenvalue);
  return out;
}

}  // namespace

const SpectralCluster* SpectralDecomposition::find(double lambda, double tol) const {
  const SpectralCluster* best = nullptr;
  double best_gap = std::numeric_limits<double>::infinity();
  for (const auto& c : clusters) {
    const double gap = std::abs(c.eigenvalue - lambda);
    if (gap < best_gap) {
      best_gap = gap;
      best = &c;
    }
  }
  if (best && best_gap <= tol * std::max(1.0, std::abs(lambda))) return best;
  return nullptr;
}

SpectralDecomposition eigendecompose_symmetric(const IntMatrix& m, const IntPolynomial& char_poly_m,
                                               const Tolerances& tol) {
  require_symmetric(m, "eigendecompose_symmetric");
  const auto n = static_cast<std::size_t>(m.rows());
  if (char_poly_m.degree() != static_cast<long>(n) || char_poly_m.leading() != 1) {
    throw std::invalid_argument("eigendecompose_symmetric: characteristic polynomial has the wrong degree");
  }

  SpectralDecomposition out;
  out.matrix = to_double_matrix(m);
  out.structure = multiplicity_structure(char_poly_m);
  const auto& factors = out.structure.factors;
  if (n == 0) return out;

  const JacobiEigenSolver<Eigen::MatrixXd> solver(out.matrix);
  const Eigen::VectorXd& values = solver.eigenvalues();
  const double scale = std::max(1.0, out.matrix.norm());
  const double root_tol = tol.root * scale;

  // Each eigenvalue goes to the factor with the nearest root; cluster sizes
  // then come from the factor's exact multiplicity.
  std::vector<std::vector<Eigen::Index>> members(factors.size());
  std::ostringstream diagnostics;
  bool failed = false;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    std::size_t best = 0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const double dist = root_distance_estimate(factors[f].factor, values(i));
      if (dist < best_distance) {
        best_distance = dist;
        best = f;
      }
    }
    diagnostics << "  eigenvalue " << values(i) << " -> factor " << best << " (" << to_string(factors[best].factor)
                << ", multiplicity " << factors[best].multiplicity << "), distance " << best_distance << "\n";
    if (best_distance > root_tol) failed = true;
    members[best].push_back(i);
  }
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto expected = static_cast<std::size_t>(factors[f].factor.degree()) * factors[f].multiplicity;
    if (members[f].size() != expected) {
      diagnostics << "  factor " << f << " expects " << expected << " eigenvalues, got " << members[f].size()
                  << "\n";
      failed = true;
    }
  }
  if (failed) throw ClusteringError("clustering failure: numeric spectrum disagrees with exact multiplicities\n" +
                                    diagnostics.str());

  for (std::size_t f = 0; f < factors.size(); ++f) {
    const unsigned mult = factors[f].multiplicity;
    for (std::size_t start = 0; start < members[f].size(); start += mult) {
      SpectralCluster cluster;
      cluster.multiplicity = mult;
      cluster.factor_index = f;
      cluster.basis.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(mult));
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      double sum = 0.0;
      for (unsigned k = 0; k < mult; ++k) {
        const Eigen::Index idx = members[f][start + k];
        cluster.basis.col(static_cast<Eigen::Index>(k)) = solver.eigenvectors().col(idx);
        lo = std::min(lo, values(idx));
        hi = std::max(hi, values(idx));
        sum += values(idx);
      }
      if (hi - lo > root_tol) {
        throw ClusteringError("clustering failure: eigenvalues " + std::to_string(lo) + " .. " +
                              std::to_string(hi) + " assigned to one root of " + to_string(factors[f].factor) +
                              "\n" + diagnostics.str());
      }
      cluster.eigenvalue = sum / static_cast<double>(mult);
      cluster.projector = cluster.basis * cluster.basis.transpose();
      out.clusters.push_back(std::move(cluster));
    }
  }
  std::sort(out.clusters.begin(), out.clusters.end(),
            [](const SpectralCluster& a, const SpectralCluster& b) { return a.eigenvalue > b.eigenvalue; });
  return out;
}

SpectralDecomposition eigendecompose_symmetric(const IntMatrix& m, const Tolerances& tol) {
  return eigendecompose_symmetric(m, char_poly(m), tol);
}

double projection_diagonal_gap(const SpectralDecomposition& d, Vertex u, Vertex v) {
  if (u >= d.order() || v >= d.order()) throw std::out_of_range("projection_diagonal: vertex out of range");
  const auto iu = static_cast<Eigen::Index>(u);
  const auto iv = static_cast<Eigen::Index>(v);
  double gap = 0.0;
  for (const auto& c : d.clusters) gap = std::max(gap, std::abs(c.projector(iu, iu) - c.projector(iv, iv)));
  return gap;
}

bool projection_diagonal_equal(const SpectralDecomposition& d, Vertex u, Vertex v, double tol) {
  return projection_diagonal_gap(d, u, v) <= tol;
}

StrongCospectralityResult strong_cospectrality_from(const SpectralDecomposition& d, Vertex u, Vertex v,
                                                    double tol) {
  if (u >= d.order() || v >= d.order()) throw std::out_of_range("strong cospectrality: vertex out of range");
  StrongCospectralityResult out;
  out.verdict = StrongVerdict::strong;
  for (const auto& c : d.clusters) {
    const Eigen::VectorXd pu = c.projector.col(static_cast<Eigen::Index>(u));
    const Eigen::VectorXd pv = c.projector.col(static_cast<Eigen::Index>(v));
    ProjectionSign sign = ProjectionSign::neither;
    if (pu.norm() <= tol && pv.norm() <= tol) {
      sign = ProjectionSign::zero;
    } else if ((pu - pv).norm() <= tol) {
      sign = ProjectionSign::plus;
    } else if ((pu + pv).norm() <= tol) {
      sign = ProjectionSign::minus;
    } else {
      out.verdict = StrongVerdict::cospectral_only;
    }
    out.eigenvalues.push_back(c.eigenvalue);
    out.signs.push_back(sign);
  }
  return out;
}

StrongCospectralityResult check_strong_cospectrality(const Graph& g, Vertex u, Vertex v, double tol,
                                                     const Tolerances& tolerances) {
  if (u == v) throw std::invalid_argument("check_strong_cospectrality: vertices must be distinct");
  if (u >= g.order() || v >= g.order()) throw std::out_of_range("check_strong_cospectrality: vertex out of range");
  const IntMatrix a = adjacency_matrix(g);
  if (!krylov_orthogonal(a, u, v)) return {};
  return strong_cospectrality_from(eigendecompose_symmetric(a, tolerances), u, v, tol);
}

namespace {

std::pair<Graph, PendantReport> attach_pendant_at(const Graph& g, const SpectralDecomposition& d,
                                                  const SpectralCluster& cluster, Vertex target, double component,
                                                  const Tolerances& tol) {
  const Vertex pendant = g.order();
  Graph grown = g.with_vertices(1).with_edges({{target, pendant}});

  PendantReport report;
  report.eigenvalue = cluster.eigenvalue;
  report.multiplicity_before = cluster.multiplicity;
  report.attached_to = target;
  report.pendant = pendant;
  report.component = component;

  const IntMatrix grown_a = adjacency_matrix(grown);
  const SpectralDecomposition grown_d = eigendecompose_symmetric(grown_a, tol);
  report.multiplicity_after = grown_d.structure.multiplicity_near(cluster.eigenvalue, tol.root);

  std::size_t first = 0;
  for (const auto& c : d.clusters) {
    if (&c == &cluster) break;
    first += c.multiplicity;
  }
  const auto after = flat_spectrum(grown_d);
  report.upper_gap = after.at(first) - cluster.eigenvalue;
  report.lower_gap = cluster.eigenvalue - after.at(first + cluster.multiplicity);
  const double strict_tol = tol.residual_tol(grown_d.matrix.norm());
  report.interlacing_strict = report.upper_gap > strict_tol && report.lower_gap > strict_tol;
  return {std::move(grown), report};
}

const SpectralCluster& degenerate_cluster(const SpectralDecomposition& d, double eigenvalue, const Tolerances& tol) {
  const SpectralCluster* cluster = d.find(eigenvalue, tol.root * std::max(1.0, d.matrix.norm()));
  if (cluster == nullptr) {
    throw std::invalid_argument("attach_pendant_reduce: " + std::to_string(eigenvalue) + " is not an eigenvalue");
  }
  if (cluster->multiplicity < 2) {
    throw std::invalid_argument("attach_pendant_reduce: eigenvalue " + std::to_string(eigenvalue) +
                                " is simple; multiplicity must exceed 1");
  }
  return *cluster;
}

/// Largest |y_v|; ties within round-off go to the smallest vertex.
std::pair<Vertex, double> largest_component(const Eigen::VectorXd& y) {
  const double peak = y.cwiseAbs().maxCoeff();
  for (Eigen::Index v = 0; v < y.size(); ++v) {
    if (std::abs(y(v)) >= peak * (1.0 - 1e-9)) return {static_cast<Vertex>(v), std::abs(y(v))};
  }
  return {0, 0.0};
}

}  // namespace

std::pair<Graph, PendantReport> attach_pendant_reduce(const Graph& g, double eigenvalue, const Tolerances& tol) {
  const SpectralDecomposition d = eigendecompose_symmetric(adjacency_matrix(g), tol);
  const SpectralCluster& cluster = degenerate_cluster(d, eigenvalue, tol);
  Vertex target = 0;
  double component = -1.0;
  for (Eigen::Index k = 0; k < cluster.basis.cols(); ++k) {
    const auto [v, size] = largest_component(cluster.basis.col(k));
    if (size > component * (1.0 + 1e-9) || (std::abs(size - component) <= 1e-9 * size && v < target)) {
      target = v;
      component = size;
    }
  }
  if (component <= tol.coefficient) {
    throw NumericError("attach_pendant_reduce: eigenvector has no component above tau_c");
  }
  return attach_pendant_at(g, d, cluster, target, component, tol);
}

std::pair<Graph, PendantReport> attach_pendant_reduce(const Graph& g, double eigenvalue,
                                                      const Eigen::VectorXd& eigenvector, const Tolerances& tol) {
  if (eigenvector.size() != static_cast<Eigen::Index>(g.order())) {
    throw std::invalid_argument("attach_pendant_reduce: eigenvector length does not match the graph");
  }
  const SpectralDecomposition d = eigendecompose_symmetric(adjacency_matrix(g), tol);
  const SpectralCluster& cluster = degenerate_cluster(d, eigenvalue, tol);
  const double residual = (d.matrix * eigenvector - cluster.eigenvalue * eigenvector).norm();
  if (eigenvector.norm() == 0.0 || residual > tol.residual_tol(d.matrix.norm()) * eigenvector.norm()) {
    throw std::invalid_argument("attach_pendant_reduce: vector is not an eigenvector for " +
                                std::to_string(eigenvalue));
  }
  const Eigen::VectorXd unit = eigenvector.normalized();
  const auto [target, component] = largest_component(unit);
  if (component <= tol.coefficient) {
    throw NumericError("attach_pendant_reduce: eigenvector has no component above tau_c");
  }
  return attach_pendant_at(g, d, cluster, target, component, tol);
}

std::string to_string(StrongVerdict verdict) {
  switch (verdict) {
    case StrongVerdict::strong:
      return "strong";
    case StrongVerdict::cospectral_only:
      return "cospectral-only";
    case StrongVerdict::not_cospectral:
      return "not-cospectral";
  }
  return "unknown";
}

std::string to_string(ProjectionSign sign) {
  switch (sign) {
    case ProjectionSign::plus:
      return "+";
    case ProjectionSign::minus:
      return "-";
    case ProjectionSign::zero:
      return "0";
    case ProjectionSign::neither:
      return "x";
  }
  return "?";
}

}  // namespace cospectra

#include "cospectra/induced.hpp"

#include <cmath>
#include <sstream>

namespace cospectra {

std::vector<InducedEigenpair> induced_eigenpairs(const ConstructedGraph& cg, const Tolerances& tol) {
  if (cg.kind != ConstructionKind::adjacency) {
    throw std::invalid_argument("induced_eigenpairs: requires an adjacency construction");
  }
  if (!cg.connected_orbits.empty()) {
    throw std::invalid_argument("induced_eigenpairs: construction was modified by connect_orbits");
  }
  const SpectralDecomposition base = eigendecompose_symmetric(adjacency_matrix(cg.base), tol);
  const IntMatrix big_a = adjacency_matrix(cg.graph);
  const MultiplicityStructure big_structure = multiplicity_structure(char_poly(big_a));
  const Eigen::MatrixXd big = big_a.cast<double>();
  const double residual_tol = tol.residual_tol(big.norm());
  const auto fixed = static_cast<Eigen::Index>(cg.fixed);

  std::vector<InducedEigenpair> out;
  for (const auto& cluster : base.clusters) {
    const Eigen::VectorXd projected = cluster.projector.col(fixed);
    const double c = projected.norm();
    if (c <= tol.coefficient) continue;

    InducedEigenpair pair;
    pair.eigenvalue = cluster.eigenvalue;
    pair.coefficient = c;
    pair.lifted = Eigen::VectorXd::Zero(big.rows());
    const double scale = 1.0 / (c * std::sqrt(2.0));
    for (std::size_t m = 0; m < cg.g1_map.size(); ++m) {
      const double w = projected(static_cast<Eigen::Index>(m)) * scale;
      pair.lifted(static_cast<Eigen::Index>(cg.g1_map[m])) = w;
      pair.lifted(static_cast<Eigen::Index>(cg.g2_map[m])) = -w;
    }
    pair.residual = (big * pair.lifted - pair.eigenvalue * pair.lifted).norm();
    if (pair.residual > residual_tol) {
      std::ostringstream msg;
      msg << "induced eigenpair for " << pair.eigenvalue << " has residual " << pair.residual << " > "
          << residual_tol;
      throw NumericError(msg.str());
    }
    pair.multiplicity_in_big = big_structure.multiplicity_near(pair.eigenvalue, tol.root);
    if (pair.multiplicity_in_big == 0) {
      std::ostringstream msg;
      msg << "induced eigenvalue " << pair.eigenvalue << " not located among the roots of the constructed graph";
      throw NumericError(msg.str());
    }
    pair.simple_in_big = pair.multiplicity_in_big == 1;
    out.push_back(std::move(pair));
  }
  return out;
}

double projection_residual(const ConstructedGraph& cg, const std::vector<InducedEigenpair>& pairs) {
  const std::size_t size = cg.graph.order();
  Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size));
  d(static_cast<Eigen::Index>(cg.pair.first)) = 1.0;
  d(static_cast<Eigen::Index>(cg.pair.second)) = -1.0;
  Eigen::VectorXd rest = d;
  for (const auto& p : pairs) rest -= p.lifted.dot(d) * p.lifted;
  return rest.norm();
}

StrongViaSimplicityResult strong_via_simplicity(const ConstructedGraph& cg, double tol,
                                                const Tolerances& tolerances) {
  StrongViaSimplicityResult out;
  out.pairs = induced_eigenpairs(cg, tolerances);
  bool all_simple = true;
  for (const auto& p : out.pairs) all_simple = all_simple && p.simple_in_big;
  out.verdict = all_simple ? SimplicityVerdict::strong_certified : SimplicityVerdict::inconclusive;
  out.direct = check_strong_cospectrality(cg.graph, cg.pair.first, cg.pair.second, tol, tolerances);
  if (all_simple && out.direct.verdict != StrongVerdict::strong) {
    throw std::logic_error("strong_via_simplicity: certified pair fails the direct projector check (" +
                           to_string(out.direct.verdict) + ")");
  }
  return out;
}

std::string to_string(SimplicityVerdict verdict) {
  return verdict == SimplicityVerdict::strong_certified ? "strong-certified" : "inconclusive";
}

}  // namespace cospectra

#pragma once

// Eigenpairs of an adjacency construction that are lifted from the base
// graph, and the strong-cospectrality certificate built on them.

#include <Eigen/Dense>
#include <vector>

#include "cospectra/constructions.hpp"
#include "cospectra/spectral.hpp"

namespace cospectra {

struct InducedEigenpair {
  double eigenvalue = 0.0;
  /// Unit vector: +w on copy 1, -w on copy 2, 0 on H, with w the normalized
  /// projection of e_fixed onto the eigenspace of the base graph.
  Eigen::VectorXd lifted;
  /// c = ||E e_fixed|| in the base graph.
  double coefficient = 0.0;
  unsigned multiplicity_in_big = 0;
  bool simple_in_big = false;
  /// ||A w - lambda w||_2 in the constructed graph.
  double residual = 0.0;
};

/// One pair per eigenspace of A(base) with coefficient above tol.coefficient.
/// Requires an unmodified adjacency construction (no connect_orbits), since
/// the lifted vectors are eigenvectors only there. Throws NumericError when
/// a residual exceeds tol.residual_tol.
std::vector<InducedEigenpair> induced_eigenpairs(const ConstructedGraph& cg, const Tolerances& tol = {});

/// ||d - sum_i <w_i, d> w_i|| with d = e_p1 - e_p2.
double projection_residual(const ConstructedGraph& cg, const std::vector<InducedEigenpair>& pairs);

enum class SimplicityVerdict { strong_certified, inconclusive };

struct StrongViaSimplicityResult {
  SimplicityVerdict verdict = SimplicityVerdict::inconclusive;
  std::vector<InducedEigenpair> pairs;
  /// Independent projector check on the constructed graph.
  StrongCospectralityResult direct;
};

/// Certified when every induced eigenvalue is simple in the constructed
/// graph. A certified verdict contradicted by the direct check throws
/// std::logic_error.
StrongViaSimplicityResult strong_via_simplicity(const ConstructedGraph& cg, double tol = 1e-8,
                                                const Tolerances& tolerances = {});

std::string to_string(SimplicityVerdict verdict);

}  // namespace cospectra

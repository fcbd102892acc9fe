#pragma once

// Verdicts on vertex pairs, combining exact criteria (which decide) with the
// numeric projector criterion (which is advisory).

#include <optional>
#include <string>
#include <vector>

#include "cospectra/exact.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/spectral.hpp"

namespace cospectra {

enum class MatrixKind { adjacency, laplacian };

struct CospectralityReport {
  VertexPair pair{0, 0};
  MatrixKind kind = MatrixKind::adjacency;
  bool cospectral = false;

  // Exact criteria. The first two apply to the adjacency kind only.
  std::optional<bool> char_poly_equal;
  std::optional<IntPolynomial> deleted_u_char_poly;
  std::optional<IntPolynomial> deleted_v_char_poly;
  std::optional<SequenceCheck> power_diagonal;
  SequenceCheck krylov;

  // Numeric criterion; empty if the decomposition could not be clustered.
  std::optional<bool> projection_equal;
  std::optional<double> projection_gap;
  double projection_tol = 1e-8;

  std::vector<std::string> notes;
};

/// Exact: deleted-vertex char polys, power diagonals, Krylov orthogonality.
/// Disagreement among them throws std::logic_error.
CospectralityReport verify_a_cospectral(const Graph& g, Vertex u, Vertex v, double projection_tol = 1e-8,
                                        const Tolerances& tolerances = {});

/// Exact Krylov orthogonality under the Laplacian.
CospectralityReport verify_l_cospectral(const Graph& g, Vertex u, Vertex v, double projection_tol = 1e-8,
                                        const Tolerances& tolerances = {});

struct FullReport {
  CospectralityReport adjacency;
  CospectralityReport laplacian;
  StrongCospectralityResult strong;
};

FullReport verify_pair_full(const Graph& g, Vertex u, Vertex v, double tol = 1e-8, const Tolerances& tolerances = {});

std::string to_string(MatrixKind kind);

}  // namespace cospectra

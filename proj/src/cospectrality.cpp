#include "cospectra/cospectrality.hpp"

namespace cospectra {

namespace {

void check_pair(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("vertices of a pair must be distinct");
  if (u >= g.order() || v >= g.order()) {
    throw std::out_of_range("pair (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for " +
                            std::to_string(g.order()) + " vertices");
  }
}

void add_projection(CospectralityReport& report, const IntMatrix& m, double projection_tol,
                    const Tolerances& tolerances) {
  report.projection_tol = projection_tol;
  try {
    const SpectralDecomposition d = eigendecompose_symmetric(m, tolerances);
    report.projection_gap = projection_diagonal_gap(d, report.pair.first, report.pair.second);
    report.projection_equal = *report.projection_gap <= projection_tol;
  } catch (const NumericError& e) {
    report.notes.push_back(std::string("projection criterion unavailable: ") + e.what());
  }
}

}  // namespace

CospectralityReport verify_a_cospectral(const Graph& g, Vertex u, Vertex v, double projection_tol,
                                        const Tolerances& tolerances) {
  check_pair(g, u, v);
  CospectralityReport report;
  report.pair = {u, v};
  report.kind = MatrixKind::adjacency;
  const IntMatrix a = adjacency_matrix(g);

  report.deleted_u_char_poly = char_poly(adjacency_matrix(delete_vertex(g, u)));
  report.deleted_v_char_poly = char_poly(adjacency_matrix(delete_vertex(g, v)));
  report.char_poly_equal = *report.deleted_u_char_poly == *report.deleted_v_char_poly;
  report.power_diagonal = power_diagonal_check(a, u, v);
  report.krylov = krylov_check(a, u, v);

  const bool c1 = *report.char_poly_equal;
  const bool c2 = report.power_diagonal->holds;
  const bool c4 = report.krylov.holds;
  if (c1 != c2 || c2 != c4) {
    throw std::logic_error("exact cospectrality criteria disagree: char poly " + std::to_string(c1) +
                           ", power diagonal " + std::to_string(c2) + ", krylov " + std::to_string(c4));
  }
  report.cospectral = c1;
  add_projection(report, a, projection_tol, tolerances);
  if (report.projection_equal && *report.projection_equal != report.cospectral) {
    report.notes.emplace_back("numeric projection criterion disagrees with the exact verdict");
  }
  return report;
}

CospectralityReport verify_l_cospectral(const Graph& g, Vertex u, Vertex v, double projection_tol,
                                        const Tolerances& tolerances) {
  check_pair(g, u, v);
  CospectralityReport report;
  report.pair = {u, v};
  report.kind = MatrixKind::laplacian;
  const IntMatrix l = laplacian_matrix(g);
  report.krylov = krylov_check(l, u, v);
  report.cospectral = report.krylov.holds;
  add_projection(report, l, projection_tol, tolerances);
  if (report.projection_equal && *report.projection_equal != report.cospectral) {
    report.notes.emplace_back("numeric projection criterion disagrees with the exact verdict");
  }
  report.notes.emplace_back("L-cospectrality does not imply equal Laplacian spectra of the vertex-deleted subgraphs");
  return report;
}

FullReport verify_pair_full(const Graph& g, Vertex u, Vertex v, double tol, const Tolerances& tolerances) {
  FullReport out;
  out.adjacency = verify_a_cospectral(g, u, v, tol, tolerances);
  out.laplacian = verify_l_cospectral(g, u, v, tol, tolerances);
  if (out.adjacency.cospectral) {
    out.strong = strong_cospectrality_from(eigendecompose_symmetric(adjacency_matrix(g), tolerances), u, v, tol);
  }
  return out;
}

std::string to_string(MatrixKind kind) { return kind == MatrixKind::adjacency ? "adjacency" : "laplacian"; }

}  // namespace cospectra

#include "cospectra/io.hpp"

#include <charconv>
#include <set>

namespace cospectra {

namespace {

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw std::invalid_argument(std::string(what) + ": expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

VertexPair pair_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument(std::string(what) + ": expected [a, b]");
  return {as_index(j[0], what), as_index(j[1], what)};
}

std::vector<Vertex> map_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<Vertex> out;
  for (const auto& x : j) out.push_back(as_index(x, what));
  return out;
}

Json signs_to_json(const StrongCospectralityResult& r, double tol) {
  Json clusters = Json::array();
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    clusters.push_back({{"eigenvalue", decimal(r.eigenvalues[i])}, {"sign", to_string(r.signs[i])}});
  }
  return {{"verdict", to_string(r.verdict)}, {"tolerance", tol}, {"clusters", clusters}};
}

}  // namespace

std::string decimal(double x) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, result.ptr);
}

std::vector<AttachmentEdge> attachments_from_json(const Json& j) {
  const Json& list = require(j, "attachments");
  if (!list.is_array()) throw std::invalid_argument("\"attachments\" must be an array");
  std::vector<AttachmentEdge> out;
  for (const auto& e : list) {
    AttachmentEdge a;
    const std::size_t side = as_index(require(e, "side"), "side");
    if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
    a.side = static_cast<int>(side);
    a.g_vertex = as_index(require(e, "g"), "g");
    a.h_vertex = as_index(require(e, "h"), "h");
    out.push_back(a);
  }
  return out;
}

Json attachments_to_json(const std::vector<AttachmentEdge>& attachments) {
  Json list = Json::array();
  for (const auto& a : attachments) list.push_back({{"side", a.side}, {"g", a.g_vertex}, {"h", a.h_vertex}});
  return {{"attachments", list}};
}

std::vector<CrossEdge> cross_edges_from_json(const Json& j, std::size_t n) {
  const Json& list = require(j, "cross");
  if (!list.is_array()) throw std::invalid_argument("\"cross\" must be an array");
  std::vector<CrossEdge> out;
  for (const auto& e : list) {
    const auto [a, b] = pair_from_json(e, "cross edge");
    if (a >= n || b < n || b >= 2 * n) {
      throw std::invalid_argument("cross edge [" + std::to_string(a) + ", " + std::to_string(b) +
                                  "] must join copy 1 (0.." + std::to_string(n - 1) + ") to copy 2 (" +
                                  std::to_string(n) + ".." + std::to_string(2 * n - 1) + ")");
    }
    out.push_back({a, b - n});
  }
  return out;
}

Json cross_edges_to_json(const std::vector<CrossEdge>& cross, std::size_t n) {
  Json list = Json::array();
  for (const auto& e : cross) list.push_back({e.g1_vertex, n + e.g2_vertex});
  return {{"cross", list}};
}

std::vector<VertexPair> bijection_from_json(const Json& j) {
  const Json& list = require(j, "bijection");
  if (!list.is_array()) throw std::invalid_argument("\"bijection\" must be an array");
  std::vector<VertexPair> out;
  for (const auto& e : list) out.push_back(pair_from_json(e, "bijection pair"));
  return out;
}

Json provenance_to_json(const ConstructedGraph& cg) {
  Json orbits = Json::array();
  for (const auto& o : cg.orbits.orbits) orbits.push_back(o);
  return {
      {"kind", to_string(cg.kind)},
      {"fixed", cg.fixed},
      {"pair", {cg.pair.first, cg.pair.second}},
      {"g1_map", cg.g1_map},
      {"g2_map", cg.g2_map},
      {"h_map", cg.h_map},
      {"orbits", orbits},
      {"connected_orbits", cg.connected_orbits},
      {"connected", is_connected(cg.graph)},
  };
}

ConstructedGraph provenance_from_json(const Json& j, const Graph& graph) {
  ConstructedGraph cg;
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "A") {
    cg.kind = ConstructionKind::adjacency;
  } else if (kind == "L") {
    cg.kind = ConstructionKind::laplacian;
  } else {
    throw std::invalid_argument("unknown construction kind \"" + kind + "\"");
  }
  cg.graph = graph;
  cg.fixed = as_index(require(j, "fixed"), "fixed");
  cg.pair = pair_from_json(require(j, "pair"), "pair");
  cg.g1_map = map_from_json(require(j, "g1_map"), "g1_map");
  cg.g2_map = map_from_json(require(j, "g2_map"), "g2_map");
  cg.h_map = j.contains("h_map") ? map_from_json(j.at("h_map"), "h_map") : std::vector<Vertex>{};
  if (j.contains("connected_orbits")) cg.connected_orbits = map_from_json(j.at("connected_orbits"), "connected_orbits");

  for (const auto* map : {&cg.g1_map, &cg.g2_map, &cg.h_map}) {
    for (Vertex v : *map) {
      if (v >= graph.order()) throw std::invalid_argument("provenance map entry out of range for the graph");
    }
  }
  if (cg.fixed >= cg.g1_map.size()) throw std::invalid_argument("provenance fixed vertex out of range");
  cg.base = induced_subgraph(graph, cg.g1_map);
  cg.orbits = automorphism_orbits(cg.base, cg.fixed);
  if (j.contains("orbits")) {
    std::vector<std::vector<Vertex>> stated;
    for (const auto& o : j.at("orbits")) stated.push_back(map_from_json(o, "orbit"));
    if (stated != cg.orbits.orbits) throw std::invalid_argument("provenance orbits do not match the base graph");
  }
  const auto problems = provenance_problems(cg);
  if (!problems.empty()) throw std::invalid_argument("inconsistent provenance: " + problems.front());
  return cg;
}

Json to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return {{"text", to_string(p)}, {"coefficients_low_first", coeffs}};
}

Json to_json(const OrbitPartition& p) {
  Json orbits = Json::array();
  for (const auto& o : p.orbits) orbits.push_back(o);
  Json out = {{"fixed", nullptr}, {"orbits", orbits}};
  if (p.fixed) out["fixed"] = *p.fixed;
  return out;
}

Json to_json(const CospectralityReport& r) {
  Json out = {
      {"pair", {r.pair.first, r.pair.second}},
      {"matrix", to_string(r.kind)},
      {"cospectral", r.cospectral},
  };
  Json criteria = Json::object();
  if (r.char_poly_equal) {
    criteria["char_poly_equal"] = {
        {"holds", *r.char_poly_equal},
        {"deleted_u", to_json(*r.deleted_u_char_poly)},
        {"deleted_v", to_json(*r.deleted_v_char_poly)},
    };
  }
  if (r.power_diagonal) {
    criteria["power_diagonal"] = {{"holds", r.power_diagonal->holds}, {"first_failing_k", nullptr}};
    if (r.power_diagonal->first_failing_k) criteria["power_diagonal"]["first_failing_k"] = *r.power_diagonal->first_failing_k;
  }
  criteria["krylov_orthogonal"] = {{"holds", r.krylov.holds}, {"first_failing_k", nullptr}};
  if (r.krylov.first_failing_k) criteria["krylov_orthogonal"]["first_failing_k"] = *r.krylov.first_failing_k;
  Json projection = {{"tolerance", r.projection_tol}, {"holds", nullptr}, {"gap", nullptr}};
  if (r.projection_equal) projection["holds"] = *r.projection_equal;
  if (r.projection_gap) projection["gap"] = decimal(*r.projection_gap);
  criteria["projection_diagonal"] = projection;
  out["criteria"] = criteria;
  out["notes"] = r.notes;
  return out;
}

Json to_json(const StrongCospectralityResult& r, double tol) { return signs_to_json(r, tol); }

Json to_json(const FullReport& r, double tol) {
  return {{"adjacency", to_json(r.adjacency)}, {"laplacian", to_json(r.laplacian)}, {"strong", to_json(r.strong, tol)}};
}

Json to_json(const std::vector<InducedEigenpair>& pairs, double tol) {
  Json list = Json::array();
  for (const auto& p : pairs) {
    list.push_back({
        {"eigenvalue", decimal(p.eigenvalue)},
        {"coefficient", decimal(p.coefficient)},
        {"multiplicity_in_big", p.multiplicity_in_big},
        {"simple_in_big", p.simple_in_big},
        {"residual", decimal(p.residual)},
    });
  }
  return {{"tolerance", tol}, {"induced", list}};
}

Json to_json(const PendantReport& r, double tol) {
  return {
      {"eigenvalue", decimal(r.eigenvalue)},
      {"tolerance", tol},
      {"multiplicity_before", r.multiplicity_before},
      {"multiplicity_after", r.multiplicity_after},
      {"attached_to", r.attached_to},
      {"pendant", r.pendant},
      {"component", decimal(r.component)},
      {"upper_gap", decimal(r.upper_gap)},
      {"lower_gap", decimal(r.lower_gap)},
      {"interlacing_strict", r.interlacing_strict},
  };
}

}  // namespace cospectra

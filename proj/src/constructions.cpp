#include "cospectra/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cospectra/exact.hpp"

namespace cospectra {

namespace {

constexpr int kMaxRandomAttempts = 256;

std::string pair_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

void check_fixed(const Graph& g, Vertex fixed) {
  if (g.order() == 0) throw ConstructionError("base graph has no vertices");
  if (fixed >= g.order()) throw std::out_of_range("fixed vertex " + std::to_string(fixed) + " out of range");
}

ConstructedGraph skeleton(const Graph& g, Vertex fixed, std::size_t h_order, ConstructionKind kind,
                          OrbitPartition orbits) {
  const std::size_t n = g.order();
  ConstructedGraph cg;
  cg.kind = kind;
  cg.base = g;
  cg.fixed = fixed;
  cg.orbits = std::move(orbits);
  for (Vertex v = 0; v < n; ++v) {
    cg.g1_map.push_back(v);
    cg.g2_map.push_back(n + v);
  }
  for (Vertex a = 0; a < h_order; ++a) cg.h_map.push_back(2 * n + a);
  cg.pair = {fixed, n + fixed};
  return cg;
}

std::vector<Edge> doubled_edges(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(n + u, n + v);
  }
  return edges;
}

}  // namespace

BlockLabels ConstructedGraph::blocks() const {
  BlockLabels labels(graph.order());
  for (Vertex v : g1_map) labels[v] = "g1";
  for (Vertex v : g2_map) labels[v] = "g2";
  for (Vertex v : h_map) labels[v] = "h";
  return labels;
}

AttachmentReport validate_attachments(const OrbitPartition& orbits, std::size_t h_order,
                                      const std::vector<AttachmentEdge>& attachments) {
  const std::size_t n = orbits.orbit_of.size();
  AttachmentReport report;
  std::map<std::pair<Vertex, std::size_t>, AttachmentCount> counts;
  std::set<std::tuple<int, Vertex, Vertex>> seen;
  for (const auto& e : attachments) {
    if (e.side != 1 && e.side != 2) {
      throw std::invalid_argument("attachment side must be 1 or 2, got " + std::to_string(e.side));
    }
    if (e.g_vertex >= n) throw std::out_of_range("attachment g_vertex " + std::to_string(e.g_vertex) + " out of range");
    if (e.h_vertex >= h_order) {
      throw std::out_of_range("attachment h_vertex " + std::to_string(e.h_vertex) + " out of range");
    }
    if (!seen.emplace(e.side, e.g_vertex, e.h_vertex).second) {
      report.valid = false;
      report.problems.push_back("duplicate attachment: side " + std::to_string(e.side) + ", g " +
                                std::to_string(e.g_vertex) + ", h " + std::to_string(e.h_vertex));
      continue;
    }
    const std::size_t orbit = orbits.orbit_of[e.g_vertex];
    auto& count = counts[{e.h_vertex, orbit}];
    count.h_vertex = e.h_vertex;
    count.orbit = orbit;
    (e.side == 1 ? count.copy1 : count.copy2) += 1;
  }
  for (const auto& [key, count] : counts) {
    report.counts.push_back(count);
    if (count.copy1 != count.copy2) {
      report.valid = false;
      std::ostringstream out;
      out << "h vertex " << count.h_vertex << " has " << count.copy1 << " neighbour(s) in copy 1 and "
          << count.copy2 << " in copy 2 of orbit " << count.orbit << " {";
      const auto& members = orbits.orbits[count.orbit];
      for (std::size_t i = 0; i < members.size(); ++i) out << (i ? ", " : "") << members[i];
      out << "}";
      report.problems.push_back(out.str());
    }
  }
  return report;
}

AttachmentReport validate_attachments(const Graph& g, Vertex fixed, const Graph& h,
                                      const std::vector<AttachmentEdge>& attachments, const OrbitOptions& options) {
  check_fixed(g, fixed);
  return validate_attachments(automorphism_orbits(g, fixed, options), h.order(), attachments);
}

ConstructedGraph build_a_cospectral(const Graph& g, Vertex fixed, const Graph& h,
                                    const std::vector<AttachmentEdge>& attachments, const OrbitOptions& options) {
  check_fixed(g, fixed);
  OrbitPartition orbits = automorphism_orbits(g, fixed, options);
  AttachmentReport report = validate_attachments(orbits, h.order(), attachments);
  if (!report.valid) {
    std::string message = "invalid attachment set";
    for (const auto& p : report.problems) message += "; " + p;
    throw ConstructionError(message, std::move(report));
  }
  const std::size_t n = g.order();
  ConstructedGraph cg = skeleton(g, fixed, h.order(), ConstructionKind::adjacency, std::move(orbits));
  std::vector<Edge> edges = doubled_edges(g);
  for (const auto& [a, b] : h.edges()) edges.emplace_back(2 * n + a, 2 * n + b);
  for (const auto& e : attachments) {
    edges.emplace_back(e.side == 1 ? e.g_vertex : n + e.g_vertex, 2 * n + e.h_vertex);
  }
  cg.graph = Graph(2 * n + h.order(), edges);
  return cg;
}

ConstructedGraph connect_orbits(const ConstructedGraph& cg, std::size_t orbit_index,
                                const std::vector<VertexPair>& bijection) {
  if (cg.kind != ConstructionKind::adjacency) {
    throw ConstructionError("connect_orbits applies to adjacency constructions only");
  }
  if (orbit_index >= cg.orbits.size()) {
    throw std::out_of_range("orbit index " + std::to_string(orbit_index) + " out of range");
  }
  const auto& orbit = cg.orbits.orbits[orbit_index];
  std::set<Vertex> side1;
  std::set<Vertex> side2;
  for (Vertex v : orbit) {
    side1.insert(cg.g1_map[v]);
    side2.insert(cg.g2_map[v]);
  }
  if (bijection.size() != orbit.size()) {
    throw ConstructionError("bijection has " + std::to_string(bijection.size()) + " pairs but orbit " +
                            std::to_string(orbit_index) + " has " + std::to_string(orbit.size()) + " vertices");
  }
  std::set<Vertex> used1;
  std::set<Vertex> used2;
  std::vector<Edge> extra;
  for (const auto& [a, b] : bijection) {
    if (!side1.count(a) || !side2.count(b)) {
      throw ConstructionError("pair " + pair_text(a, b) + " does not join copy 1 to copy 2 of orbit " +
                              std::to_string(orbit_index));
    }
    if (!used1.insert(a).second || !used2.insert(b).second) {
      throw ConstructionError("pair " + pair_text(a, b) + " reuses a vertex; not a bijection");
    }
    if (cg.graph.has_edge(a, b)) throw ConstructionError("edge " + pair_text(a, b) + " already present");
    extra.emplace_back(a, b);
  }
  ConstructedGraph out = cg;
  out.graph = cg.graph.with_edges(extra);
  out.connected_orbits.push_back(orbit_index);
  return out;
}

ConstructedGraph build_l_cospectral(const Graph& g, Vertex fixed, const std::vector<CrossEdge>& cross_edges,
                                    const OrbitOptions& options) {
  check_fixed(g, fixed);
  const std::size_t n = g.order();
  OrbitPartition orbits = automorphism_orbits(g, fixed, options);
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Edge> edges = doubled_edges(g);
  for (const auto& e : cross_edges) {
    if (e.g1_vertex >= n || e.g2_vertex >= n) {
      throw std::out_of_range("cross edge " + pair_text(e.g1_vertex, e.g2_vertex) + " out of range");
    }
    const std::size_t o1 = orbits.orbit_of[e.g1_vertex];
    const std::size_t o2 = orbits.orbit_of[e.g2_vertex];
    if (o1 != o2) {
      throw ConstructionError("cross edge " + pair_text(e.g1_vertex, e.g2_vertex) + " joins orbit " +
                              std::to_string(o1) + " to orbit " + std::to_string(o2));
    }
    if (!seen.emplace(e.g1_vertex, e.g2_vertex).second) {
      throw ConstructionError("duplicate cross edge " + pair_text(e.g1_vertex, e.g2_vertex));
    }
    edges.emplace_back(e.g1_vertex, n + e.g2_vertex);
  }
  ConstructedGraph cg = skeleton(g, fixed, 0, ConstructionKind::laplacian, std::move(orbits));
  cg.graph = Graph(2 * n, edges);
  return cg;
}

std::vector<VertexPair> random_orbit_bijection(const ConstructedGraph& cg, std::size_t orbit_index,
                                               std::mt19937_64& rng) {
  const auto& orbit = cg.orbits.orbits.at(orbit_index);
  std::vector<Vertex> targets = orbit;
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < orbit.size(); ++i) out.emplace_back(cg.g1_map[orbit[i]], cg.g2_map[targets[i]]);
  return out;
}

ConstructedGraph random_instance(std::uint64_t seed, const RandomInstanceParams& params) {
  if (params.max_g == 0) throw std::invalid_argument("random_instance: max_g must be positive");
  if (params.density < 0.0 || params.density > 1.0) {
    throw std::invalid_argument("random_instance: density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(params.density);
  std::optional<ConstructedGraph> last;
  for (int attempt = 0; attempt < kMaxRandomAttempts; ++attempt) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, params.max_g)(rng);
    const Graph g = random_connected_graph(rng, n, 0.3);
    const Vertex fixed = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    const OrbitPartition orbits = automorphism_orbits(g, fixed);

    if (params.kind == ConstructionKind::adjacency) {
      const std::size_t r =
          params.max_h == 0 ? 0 : std::uniform_int_distribution<std::size_t>(1, params.max_h)(rng);
      const Graph h = random_graph(rng, r, 0.3);
      std::vector<AttachmentEdge> attachments;
      for (Vertex a = 0; a < r; ++a) {
        for (const auto& orbit : orbits.orbits) {
          std::size_t chosen = 0;
          for (Vertex v : orbit) {
            if (coin(rng)) {
              attachments.push_back({1, v, a});
              ++chosen;
            }
          }
          std::vector<Vertex> shuffled = orbit;
          std::shuffle(shuffled.begin(), shuffled.end(), rng);
          for (std::size_t i = 0; i < chosen; ++i) attachments.push_back({2, shuffled[i], a});
        }
      }
      last = build_a_cospectral(g, fixed, h, attachments);
    } else {
      std::vector<CrossEdge> cross;
      for (const auto& orbit : orbits.orbits) {
        for (Vertex u : orbit) {
          for (Vertex w : orbit) {
            if (coin(rng)) cross.push_back({u, w});
          }
        }
      }
      last = build_l_cospectral(g, fixed, cross);
    }
    if (is_connected(last->graph)) break;
    // Connectivity is unreachable without H or with density 0.
    if (params.density == 0.0 || (params.kind == ConstructionKind::adjacency && params.max_h == 0)) break;
  }
  return *last;
}

namespace {

bool constant_on_orbits(const ConstructedGraph& cg, const IntVector& x, const std::vector<Vertex>& map) {
  for (const auto& orbit : cg.orbits.orbits) {
    const BigInt& first = x(static_cast<Eigen::Index>(map[orbit.front()]));
    for (Vertex v : orbit) {
      if (x(static_cast<Eigen::Index>(map[v])) != first) return false;
    }
  }
  return true;
}

}  // namespace

ClaimCheck check_a_construction_claims(const ConstructedGraph& cg) {
  const IntMatrix a = adjacency_matrix(cg.graph);
  const std::size_t size = cg.graph.order();
  IntVector x = basis_vector<BigInt>(size, cg.pair.first) - basis_vector<BigInt>(size, cg.pair.second);
  for (std::size_t k = 0; k < size; ++k) {
    for (Vertex h : cg.h_map) {
      if (x(static_cast<Eigen::Index>(h)) != 0) return {false, k, "vanishes on H"};
    }
    for (std::size_t m = 0; m < cg.g1_map.size(); ++m) {
      const BigInt& v1 = x(static_cast<Eigen::Index>(cg.g1_map[m]));
      const BigInt& v2 = x(static_cast<Eigen::Index>(cg.g2_map[m]));
      if (v1 != -v2) return {false, k, "antisymmetric across copies"};
    }
    if (!constant_on_orbits(cg, x, cg.g1_map)) return {false, k, "constant on orbits"};
    IntVector next = a * x;
    x.swap(next);
  }
  return {};
}

ClaimCheck check_l_construction_claims(const ConstructedGraph& cg) {
  const IntMatrix l = laplacian_matrix(cg.graph);
  const std::size_t size = cg.graph.order();
  IntVector y = basis_vector<BigInt>(size, cg.pair.first) + basis_vector<BigInt>(size, cg.pair.second);
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t m = 0; m < cg.g1_map.size(); ++m) {
      if (y(static_cast<Eigen::Index>(cg.g1_map[m])) != y(static_cast<Eigen::Index>(cg.g2_map[m]))) {
        return {false, k, "symmetric across copies"};
      }
    }
    if (!constant_on_orbits(cg, y, cg.g1_map)) return {false, k, "constant on orbits"};
    IntVector next = l * y;
    y.swap(next);
  }
  return {};
}

std::vector<std::string> provenance_problems(const ConstructedGraph& cg, const std::optional<Graph>& h) {
  std::vector<std::string> problems;
  const std::size_t total = cg.graph.order();
  std::vector<int> hits(total, 0);
  for (const auto* map : {&cg.g1_map, &cg.g2_map, &cg.h_map}) {
    for (Vertex v : *map) {
      if (v >= total) {
        problems.push_back("map entry " + std::to_string(v) + " out of range");
        return problems;
      }
      ++hits[v];
    }
  }
  if (std::any_of(hits.begin(), hits.end(), [](int c) { return c != 1; })) {
    problems.emplace_back("vertex maps do not partition the vertex set");
  }
  if (cg.g1_map.size() != cg.base.order() || cg.g2_map.size() != cg.base.order()) {
    problems.emplace_back("copy maps do not match the base order");
    return problems;
  }
  if (induced_subgraph(cg.graph, cg.g1_map) != cg.base) problems.emplace_back("copy 1 does not induce the base");
  if (induced_subgraph(cg.graph, cg.g2_map) != cg.base) problems.emplace_back("copy 2 does not induce the base");
  if (h && induced_subgraph(cg.graph, cg.h_map) != *h) problems.emplace_back("H block does not induce H");
  if (cg.pair != VertexPair{cg.g1_map.at(cg.fixed), cg.g2_map.at(cg.fixed)}) {
    problems.emplace_back("pair is not the image of the fixed vertex");
  }
  if (cg.kind == ConstructionKind::laplacian && !cg.h_map.empty()) {
    problems.emplace_back("laplacian construction has an H block");
  }
  return problems;
}

std::string to_string(ConstructionKind kind) { return kind == ConstructionKind::adjacency ? "A" : "L"; }

}  // namespace cospectra

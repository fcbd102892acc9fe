#include "cospectra/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>
#include <sstream>

namespace cospectra {

namespace {

Edge normalized(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::size_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    std::size_t value = 0;
    const auto token = line.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw GraphError("malformed token '" + std::string(token) + "'", line_no);
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adjacency_(n) {
  std::set<Edge> seen;
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint >= n=" + std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(normalized(u, v)).second) {
      throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
  }
  edges_.assign(seen.begin(), seen.end());
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph Graph::with_edges(const std::vector<Edge>& extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(order(), all);
}

Graph Graph::with_vertices(std::size_t count) const { return Graph(order() + count, edges_); }

Graph parse_edge_list(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(pos, end - pos);
    raw = raw.substr(0, raw.find('#'));
    const auto line = trim(raw);
    ++line_no;
    pos = end + 1;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto nums = parse_numbers(line, line_no);
    if (nums.size() != 2) throw GraphError("expected two integers", line_no);
    if (!header) {
      header = std::pair{nums[0], nums[1]};
    } else {
      const auto [n, m] = *header;
      const Vertex u = nums[0];
      const Vertex v = nums[1];
      if (u >= n || v >= n) throw GraphError("vertex id >= n=" + std::to_string(n), line_no);
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u), line_no);
      if (!seen.insert(normalized(u, v)).second) {
        throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_no);
      }
      if (edges.size() == m) throw GraphError("more edges than declared m=" + std::to_string(m), line_no);
      edges.emplace_back(u, v);
    }
    if (end == text.size()) break;
  }
  if (!header) throw GraphError("missing 'n m' header", line_no);
  if (edges.size() != header->second) {
    throw GraphError("declared " + std::to_string(header->second) + " edges, found " +
                         std::to_string(edges.size()),
                     line_no);
  }
  return Graph(header->first, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

IntMatrix adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  IntMatrix a = IntMatrix::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1;
    a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1;
  }
  return a;
}

IntMatrix laplacian_matrix(const Graph& g) {
  IntMatrix l = -adjacency_matrix(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto i = static_cast<Eigen::Index>(v);
    l(i, i) = static_cast<unsigned long>(g.degree(v));
  }
  return l;
}

Eigen::MatrixXd adjacency_matrix_d(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
    a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1.0;
  }
  return a;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw std::out_of_range("delete_vertex: vertex " + std::to_string(v) + " out of range");
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return Graph(g.order() - 1, edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<std::optional<Vertex>> position(g.order());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
    position[vertices[i]] = i;
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    if (position[a] && position[b]) edges.emplace_back(*position[a], *position[b]);
  }
  return Graph(vertices.size(), edges);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == g.order();
}

std::string to_dot(const Graph& g, const std::optional<VertexPair>& highlight,
                   const std::optional<BlockLabels>& blocks) {
  std::ostringstream out;
  out << "graph G {\n";
  if (blocks) {
    if (blocks->size() != g.order()) throw std::invalid_argument("to_dot: one block label per vertex");
    std::vector<std::string> order;
    for (const auto& label : *blocks) {
      if (std::find(order.begin(), order.end(), label) == order.end()) order.push_back(label);
    }
    for (const auto& label : order) {
      out << "  subgraph cluster_" << label << " {\n    label=\"" << label << "\";\n";
      for (Vertex v = 0; v < g.order(); ++v) {
        if ((*blocks)[v] == label) out << "    " << v << ";\n";
      }
      out << "  }\n";
    }
  } else {
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  }
  if (highlight) {
    for (Vertex v : {highlight->first, highlight->second}) {
      out << "  " << v << " [color=blue, style=filled, fillcolor=lightblue];\n";
    }
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double extra_edge_p) {
  std::set<Edge> edges;
  // Random recursive tree: each vertex attaches to an earlier one.
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    edges.insert(normalized(pick(rng), v));
  }
  std::bernoulli_distribution coin(extra_edge_p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!edges.count({u, v}) && coin(rng)) edges.insert({u, v});
    }
  }
  // Shuffle labels so trees are not biased towards low ids being central.
  std::vector<Vertex> relabel(n);
  for (Vertex v = 0; v < n; ++v) relabel[v] = v;
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<Edge> out;
  for (const auto& [u, v] : edges) out.emplace_back(relabel[u], relabel[v]);
  return Graph(n, out);
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace cospectra

#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cospectra/scalar.hpp"

namespace cospectra {

using Edge = std::pair<Vertex, Vertex>;
using VertexPair = std::pair<Vertex, Vertex>;

/// Raised on malformed graph input; parse failures carry the 1-based line.
class GraphError : public std::invalid_argument {
 public:
  explicit GraphError(const std::string& what, std::size_t line = 0)
      : std::invalid_argument(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Edges are stored normalized (u < v) and sorted, so
/// two graphs with the same vertex count and edge set compare equal.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self-loops, duplicates or out-of-range endpoints.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Returns a copy with the extra edges; same validation as the constructor.
  Graph with_edges(const std::vector<Edge>& extra) const;
  /// Returns a copy with `count` isolated vertices appended.
  Graph with_vertices(std::size_t count) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Parses the "n m" header edge-list format; '#' lines are comments.
Graph parse_edge_list(std::string_view text);
/// Inverse of parse_edge_list: header then one sorted edge per line.
std::string serialize_edge_list(const Graph& g);

IntMatrix adjacency_matrix(const Graph& g);
/// L = D - A.
IntMatrix laplacian_matrix(const Graph& g);
Eigen::MatrixXd adjacency_matrix_d(const Graph& g);

/// Removes v and compacts the remaining ids, preserving their order.
Graph delete_vertex(const Graph& g, Vertex v);

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

bool is_connected(const Graph& g);

/// Per-vertex cluster label for DOT output ("g1", "g2", "h", ...).
using BlockLabels = std::vector<std::string>;

std::string to_dot(const Graph& g, const std::optional<VertexPair>& highlight = std::nullopt,
                   const std::optional<BlockLabels>& blocks = std::nullopt);

// Named small graphs.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K_{1,leaves}, center 0.
Graph star_graph(std::size_t leaves);

/// Random spanning tree plus each remaining edge with probability `extra_edge_p`.
Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double extra_edge_p);
/// Erdos-Renyi G(n, p).
Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);

}  // namespace cospectra

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cospectra/graph.hpp"

namespace cospectra {

/// Vertex permutation; perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OrbitOptions {
  /// Graphs with more vertices are refused with SearchLimitError.
  std::size_t max_vertices = 64;
};

/// Orbits of V(G) under Aut(G, fixed), or under Aut(G) when `fixed` is empty.
struct OrbitPartition {
  std::optional<Vertex> fixed;
  /// Each orbit sorted ascending; orbits ordered by their minimum element.
  std::vector<std::vector<Vertex>> orbits;
  std::vector<std::size_t> orbit_of;

  std::size_t size() const { return orbits.size(); }
  const std::vector<Vertex>& orbit_containing(Vertex v) const { return orbits.at(orbit_of.at(v)); }
};

/// Exact orbit partition of Aut(G, fixed).
///
/// Equitable colour refinement with `fixed` individualized gives candidate
/// classes; each candidate pair is then settled by an individualization-
/// refinement backtracking search for an automorphism, and found
/// automorphisms are merged into a union-find over their cycles.
OrbitPartition automorphism_orbits(const Graph& g, Vertex fixed, const OrbitOptions& options = {});

/// Orbits of the full automorphism group.
OrbitPartition automorphism_orbits(const Graph& g, const OrbitOptions& options = {});

/// Throws std::out_of_range for ids outside the partition.
bool same_orbit(const OrbitPartition& p, Vertex u, Vertex v);

/// Searches for an automorphism fixing every vertex of `fixed` and mapping
/// `from` to `to`. Returns a witness permutation if one exists.
std::optional<Permutation> find_automorphism(const Graph& g, std::span<const Vertex> fixed, Vertex from,
                                             Vertex to, const OrbitOptions& options = {});

bool is_automorphism(const Graph& g, const Permutation& perm);

/// Stable equitable refinement of `colors`; exposed for testing.
std::vector<std::size_t> refine_colors(const Graph& g, std::vector<std::size_t> colors);

}  // namespace cospectra

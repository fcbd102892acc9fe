#pragma once

// Gluing constructions that produce certified cospectral vertex pairs.
//
// Vertex layout of every constructed graph on base G (n vertices) and
// auxiliary H (r vertices):
//   copy 1 of G : 0 .. n-1      (identity map)
//   copy 2 of G : n .. 2n-1
//   H           : 2n .. 2n+r-1  (adjacency construction only)
// The certified pair is (v_c, n + v_c).

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospectra/graph.hpp"
#include "cospectra/orbits.hpp"

namespace cospectra {

enum class ConstructionKind { adjacency, laplacian };

/// Edge between copy `side` (1 or 2) of G and H.
struct AttachmentEdge {
  int side = 1;
  Vertex g_vertex = 0;
  Vertex h_vertex = 0;

  friend bool operator==(const AttachmentEdge&, const AttachmentEdge&) = default;
};

/// Edge between g1_vertex in copy 1 and g2_vertex in copy 2 (base-G ids).
struct CrossEdge {
  Vertex g1_vertex = 0;
  Vertex g2_vertex = 0;

  friend bool operator==(const CrossEdge&, const CrossEdge&) = default;
};

/// Neighbours of one H vertex inside one orbit, per copy.
struct AttachmentCount {
  Vertex h_vertex = 0;
  std::size_t orbit = 0;
  std::size_t copy1 = 0;
  std::size_t copy2 = 0;
};

struct AttachmentReport {
  bool valid = true;
  /// Every (h_vertex, orbit) with at least one attachment, sorted.
  std::vector<AttachmentCount> counts;
  std::vector<std::string> problems;
};

class ConstructionError : public std::invalid_argument {
 public:
  explicit ConstructionError(const std::string& what, std::optional<AttachmentReport> report = std::nullopt)
      : std::invalid_argument(what), report_(std::move(report)) {}

  const std::optional<AttachmentReport>& report() const { return report_; }

 private:
  std::optional<AttachmentReport> report_;
};

/// A constructed graph plus the provenance needed to audit its pair.
struct ConstructedGraph {
  Graph graph;
  ConstructionKind kind = ConstructionKind::adjacency;
  Graph base;
  Vertex fixed = 0;
  std::vector<Vertex> g1_map;
  std::vector<Vertex> g2_map;
  std::vector<Vertex> h_map;
  VertexPair pair{0, 0};
  /// Orbits of Aut(base, fixed).
  OrbitPartition orbits;
  /// Orbit indices joined by connect_orbits, in order of application.
  std::vector<std::size_t> connected_orbits;

  /// "g1" / "g2" / "h" per vertex, for DOT clusters.
  BlockLabels blocks() const;
};

AttachmentReport validate_attachments(const Graph& g, Vertex fixed, const Graph& h,
                                      const std::vector<AttachmentEdge>& attachments,
                                      const OrbitOptions& options = {});
AttachmentReport validate_attachments(const OrbitPartition& orbits, std::size_t h_order,
                                      const std::vector<AttachmentEdge>& attachments);

/// Two copies of g and one of h joined by orbit-balanced attachment edges.
/// Throws ConstructionError (carrying the report) when validation fails.
ConstructedGraph build_a_cospectral(const Graph& g, Vertex fixed, const Graph& h,
                                    const std::vector<AttachmentEdge>& attachments,
                                    const OrbitOptions& options = {});

/// Joins the two copies of one orbit by a perfect matching. `bijection`
/// holds (copy-1 id, copy-2 id) pairs in constructed-graph ids.
ConstructedGraph connect_orbits(const ConstructedGraph& cg, std::size_t orbit_index,
                                const std::vector<VertexPair>& bijection);

/// Two copies of g joined by edges that stay inside one orbit.
ConstructedGraph build_l_cospectral(const Graph& g, Vertex fixed, const std::vector<CrossEdge>& cross_edges,
                                    const OrbitOptions& options = {});

struct RandomInstanceParams {
  std::size_t max_g = 5;
  std::size_t max_h = 3;
  /// Probability of each candidate attachment / cross edge.
  double density = 0.4;
  ConstructionKind kind = ConstructionKind::adjacency;
};

/// Seeded random valid construction; prefers connected outputs and retries
/// until one is found (bounded), then returns the last attempt.
ConstructedGraph random_instance(std::uint64_t seed, const RandomInstanceParams& params);

/// Uniformly random matching between the two copies of an orbit.
std::vector<VertexPair> random_orbit_bijection(const ConstructedGraph& cg, std::size_t orbit_index,
                                               std::mt19937_64& rng);

/// Result of checking the exact trajectory claims for all k < |V|.
struct ClaimCheck {
  bool holds = true;
  std::optional<std::size_t> failing_k;
  std::string failed_claim;
};

/// With x_k = A^k (e_p1 - e_p2): (i) x_k vanishes on H; (ii) copy-2 entries
/// are the negated copy-1 entries; (iii) x_k is constant on each orbit copy.
ClaimCheck check_a_construction_claims(const ConstructedGraph& cg);

/// With y_k = L^k (e_p1 + e_p2): (i) equal on corresponding vertices of the
/// two copies; (ii) constant on each orbit copy.
ClaimCheck check_l_construction_claims(const ConstructedGraph& cg);

/// Structural invariants of the provenance (maps partition the vertex set,
/// copies induce base and H, pair matches the fixed vertex). Empty if sound.
std::vector<std::string> provenance_problems(const ConstructedGraph& cg, const std::optional<Graph>& h = std::nullopt);

std::string to_string(ConstructionKind kind);

}  // namespace cospectra

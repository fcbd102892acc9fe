#pragma once

// Bundled example graphs with known cospectral pairs.

#include <optional>
#include <string>
#include <vector>

#include "cospectra/constructions.hpp"

namespace cospectra {

struct Fixture {
  std::string name;
  std::string description;
  Graph graph;
  VertexPair pair{0, 0};
  /// Matrix under which the pair is cospectral.
  ConstructionKind kind = ConstructionKind::adjacency;
  /// Present for fixtures built by a construction.
  std::optional<ConstructedGraph> construction;
  /// H used by the construction, if any.
  std::optional<Graph> h;
  /// The construction before connect_orbits, for fixtures that joined orbits.
  std::optional<ConstructedGraph> before_modification;
};

const std::vector<std::string>& fixture_names();

/// Builds the fixture and checks its pair exactly; a fixture that fails its
/// own check throws std::logic_error. Unknown names throw std::out_of_range.
Fixture load_fixture(const std::string& name);

std::vector<Fixture> all_fixtures();

}  // namespace cospectra

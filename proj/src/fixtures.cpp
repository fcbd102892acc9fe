#include "cospectra/fixtures.hpp"

#include <functional>
#include <map>

#include "cospectra/exact.hpp"

namespace cospectra {

namespace {

Fixture from_construction(std::string name, std::string description, ConstructedGraph cg, Graph h) {
  Fixture f;
  f.name = std::move(name);
  f.description = std::move(description);
  f.graph = cg.graph;
  f.pair = cg.pair;
  f.kind = cg.kind;
  f.construction = std::move(cg);
  f.h = std::move(h);
  return f;
}

Fixture figure1() {
  // Path 0..7 with a pendant 8 on vertex 5.
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < 8; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(5, 8);
  Fixture f;
  f.name = "figure1";
  f.description = "nine-vertex tree with a non-symmetric cospectral pair";
  f.graph = Graph(9, edges);
  f.pair = {3, 6};
  return f;
}

Fixture figure3() {
  const Graph h(3, {});
  const std::vector<AttachmentEdge> attachments = {
      {1, 1, 0}, {1, 2, 1}, {1, 3, 2}, {2, 3, 0}, {2, 3, 1}, {2, 3, 2},
  };
  return from_construction("figure3", "claw doubled through three H vertices",
                           build_a_cospectral(star_graph(3), 0, h, attachments), h);
}

Fixture figure4() {
  const Graph h(3, {{0, 1}});
  const std::vector<AttachmentEdge> attachments = {{1, 2, 1}, {2, 1, 1}, {1, 2, 2}, {2, 2, 2}};
  return from_construction("figure4", "triangle doubled through a three-vertex H",
                           build_a_cospectral(complete_graph(3), 0, h, attachments), h);
}

ConstructedGraph figure5_base(Graph& h) {
  h = Graph(3, {});
  const std::vector<AttachmentEdge> attachments = {
      {1, 2, 0}, {2, 1, 0}, {2, 1, 1}, {1, 1, 1}, {2, 1, 2}, {1, 2, 2},
  };
  return build_a_cospectral(star_graph(2), 0, h, attachments);
}

Fixture figure5(bool crossed) {
  Graph h;
  ConstructedGraph cg = figure5_base(h);
  const std::size_t leaves = cg.orbits.orbit_of[1];
  const std::vector<VertexPair> bijection =
      crossed ? std::vector<VertexPair>{{1, 5}, {2, 4}} : std::vector<VertexPair>{{1, 4}, {2, 5}};
  Fixture f = from_construction(crossed ? "figure5-right" : "figure5-left",
                                crossed ? "leaf orbit joined by the crossed matching"
                                        : "leaf orbit joined by the identity matching",
                                connect_orbits(cg, leaves, bijection), h);
  f.before_modification = std::move(cg);
  return f;
}

Fixture figure6a() {
  const Graph h(2, {});
  const std::vector<AttachmentEdge> attachments = {{1, 1, 0}, {2, 1, 0}, {1, 2, 1}, {2, 1, 1}};
  return from_construction("figure6-a", "path-like example with a latent symmetry",
                           build_a_cospectral(star_graph(2), 0, h, attachments), h);
}

Fixture figure6b() {
  const Graph h(4, {{2, 3}});
  const std::vector<AttachmentEdge> attachments = {
      {1, 1, 0}, {2, 1, 0}, {1, 1, 1}, {2, 2, 1}, {1, 2, 2}, {2, 2, 2},
  };
  ConstructedGraph cg = build_a_cospectral(star_graph(2), 0, h, attachments);
  const std::size_t leaves = cg.orbits.orbit_of[1];
  Fixture f = from_construction("figure6-b", "example with a pendant in H and joined leaves",
                                connect_orbits(cg, leaves, {{1, 4}, {2, 5}}), h);
  f.before_modification = std::move(cg);
  return f;
}

Fixture figure6c() {
  const Graph h(2, {{0, 1}});
  const std::vector<AttachmentEdge> attachments = {
      {1, 0, 1}, {2, 0, 1}, {1, 1, 1}, {2, 2, 1}, {1, 1, 0}, {2, 1, 0},
  };
  ConstructedGraph cg = build_a_cospectral(star_graph(2), 0, h, attachments);
  const std::size_t leaves = cg.orbits.orbit_of[1];
  Fixture f = from_construction("figure6-c", "example with an H edge and crossed leaves",
                                connect_orbits(cg, leaves, {{2, 4}, {1, 5}}), h);
  f.before_modification = std::move(cg);
  return f;
}

const std::map<std::string, std::function<Fixture()>>& registry() {
  static const std::map<std::string, std::function<Fixture()>> table = {
      {"figure1", figure1},
      {"figure3", figure3},
      {"figure4", figure4},
      {"figure5-left", [] { return figure5(false); }},
      {"figure5-right", [] { return figure5(true); }},
      {"figure6-a", figure6a},
      {"figure6-b", figure6b},
      {"figure6-c", figure6c},
  };
  return table;
}

void self_verify(const Fixture& f) {
  const IntMatrix m = f.kind == ConstructionKind::adjacency ? adjacency_matrix(f.graph) : laplacian_matrix(f.graph);
  if (!krylov_orthogonal(m, f.pair.first, f.pair.second)) {
    throw std::logic_error("fixture " + f.name + " fails its own cospectrality check");
  }
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, make] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

Fixture load_fixture(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::out_of_range("unknown fixture: " + name);
  Fixture f = it->second();
  self_verify(f);
  return f;
}

std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out;
  for (const auto& name : fixture_names()) out.push_back(load_fixture(name));
  return out;
}

}  // namespace cospectra

// Command-line front end: constructions, verification, orbits, induced
// spectra, multiplicity reduction and bundled examples.
//
// Exit codes: 0 property holds / success, 1 property fails, 2 input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cospectra/constructions.hpp"
#include "cospectra/cospectrality.hpp"
#include "cospectra/fixtures.hpp"
#include "cospectra/induced.hpp"
#include "cospectra/io.hpp"

using namespace cospectra;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Graph read_graph(const std::string& path) { return parse_edge_list(read_text(path)); }

Json read_json(const std::string& path) { return Json::parse(read_text(path)); }

OrbitOptions orbit_options() {
  OrbitOptions options;
  if (const char* cap = std::getenv("COSPECTRA_MAX_N")) {
    try {
      options.max_vertices = std::stoul(cap);
    } catch (const std::exception&) {
      throw InputError(std::string("COSPECTRA_MAX_N is not a number: ") + cap);
    }
  }
  return options;
}

VertexPair parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--pair expects u,v");
  try {
    const Vertex u = std::stoul(text.substr(0, comma));
    const Vertex v = std::stoul(text.substr(comma + 1));
    return {u, v};
  } catch (const std::logic_error&) {
    throw InputError("--pair expects u,v with non-negative integers, got " + text);
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit_construction(const ConstructedGraph& cg, const std::string& out_path, const std::string& provenance_path,
                       const std::string& dot_path) {
  const std::string edges = serialize_edge_list(cg.graph);
  if (out_path.empty()) {
    std::cout << edges;
  } else {
    write_text(out_path, edges);
  }
  if (!provenance_path.empty()) write_text(provenance_path, provenance_to_json(cg).dump(2) + "\n");
  if (!dot_path.empty()) write_text(dot_path, to_dot(cg.graph, cg.pair, cg.blocks()));
  if (!is_connected(cg.graph)) std::cerr << "note: constructed graph is not connected\n";
}

void print_report(const CospectralityReport& r) {
  std::cout << "pair (" << r.pair.first << ", " << r.pair.second << "), " << to_string(r.kind) << " matrix\n";
  if (r.char_poly_equal) {
    std::cout << "  deleted-vertex char polys equal : " << yes_no(*r.char_poly_equal) << "\n"
              << "    G - u: " << to_string(*r.deleted_u_char_poly) << "\n"
              << "    G - v: " << to_string(*r.deleted_v_char_poly) << "\n";
  }
  const auto failing = [](const SequenceCheck& c) {
    return c.holds ? std::string("yes") : "no (first failing k = " + std::to_string(*c.first_failing_k) + ")";
  };
  if (r.power_diagonal) std::cout << "  power diagonals equal           : " << failing(*r.power_diagonal) << "\n";
  std::cout << "  walk spaces orthogonal          : " << failing(r.krylov) << "\n";
  std::cout << "  projector diagonals equal       : ";
  if (r.projection_equal) {
    std::cout << yes_no(*r.projection_equal) << " (gap " << decimal(*r.projection_gap) << ", tol "
              << r.projection_tol << ")\n";
  } else {
    std::cout << "unavailable\n";
  }
  for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
  std::cout << "verdict: " << (r.cospectral ? "cospectral" : "not cospectral") << "\n";
}

void print_strong(const StrongCospectralityResult& r) {
  std::cout << "strong cospectrality: " << to_string(r.verdict) << "\n";
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    std::cout << "  " << decimal(r.eigenvalues[i]) << " : " << to_string(r.signs[i]) << "\n";
  }
}

struct ConstructOptions {
  std::string g_path;
  std::string h_path;
  std::string spec_path;
  Vertex fixed = 0;
  std::string out_path;
  std::string provenance_path;
  std::string dot_path;
};

void add_output_flags(CLI::App* cmd, ConstructOptions& o) {
  cmd->add_option("--out", o.out_path, "Write the edge list here instead of stdout");
  cmd->add_option("--provenance", o.provenance_path, "Write the provenance JSON sidecar here");
  cmd->add_option("--dot", o.dot_path, "Write a DOT rendering here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cospectral vertex constructions and verification"};
  app.require_subcommand(1);

  // construct a|l
  ConstructOptions construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build a graph with a certified cospectral pair");
  construct_cmd->require_subcommand(1);
  auto* construct_a = construct_cmd->add_subcommand("a", "Adjacency construction from G, H and attachments");
  construct_a->set_help_flag("--help", "Print this help message and exit");
  construct_a->add_option("--g", construct.g_path, "Base graph G (edge list)")->required();
  construct_a->add_option("--fixed", construct.fixed, "Fixed vertex of G")->required();
  construct_a->add_option("--h", construct.h_path, "Auxiliary graph H (edge list)")->required();
  construct_a->add_option("--spec", construct.spec_path, "Attachment JSON")->required();
  add_output_flags(construct_a, construct);
  auto* construct_l = construct_cmd->add_subcommand("l", "Laplacian construction from G and cross edges");
  construct_l->add_option("--g", construct.g_path, "Base graph G (edge list)")->required();
  construct_l->add_option("--fixed", construct.fixed, "Fixed vertex of G")->required();
  construct_l->add_option("--spec", construct.spec_path, "Cross-edge JSON")->required();
  add_output_flags(construct_l, construct);

  // modify connect-orbits
  ConstructOptions modify;
  std::string modify_graph;
  std::string modify_provenance;
  std::string bijection_path;
  std::size_t orbit_index = 0;
  auto* modify_cmd = app.add_subcommand("modify", "Modify a constructed graph");
  modify_cmd->require_subcommand(1);
  auto* connect_cmd = modify_cmd->add_subcommand("connect-orbits", "Join the two copies of an orbit by a matching");
  connect_cmd->add_option("--graph", modify_graph, "Constructed graph (edge list)")->required();
  connect_cmd->add_option("--from", modify_provenance, "Provenance JSON of the constructed graph")->required();
  connect_cmd->add_option("--orbit", orbit_index, "Orbit index")->required();
  connect_cmd->add_option("--bijection", bijection_path, "Bijection JSON")->required();
  add_output_flags(connect_cmd, modify);

  // verify
  std::string verify_graph;
  std::string matrix = "a";
  std::string pair_text;
  bool strong = false;
  bool full = false;
  bool as_json = false;
  double tol = 1e-8;
  auto* verify_cmd = app.add_subcommand("verify", "Check whether a vertex pair is cospectral");
  verify_cmd->add_option("--graph", verify_graph, "Edge list (default: stdin)");
  verify_cmd->add_option("--matrix", matrix, "a or l")->check(CLI::IsMember({"a", "l"}));
  verify_cmd->add_option("--pair", pair_text, "u,v")->required();
  verify_cmd->add_flag("--strong", strong, "Decide strong cospectrality (adjacency)");
  verify_cmd->add_flag("--full", full, "Adjacency, Laplacian and strong verdicts together");
  verify_cmd->add_option("--tol", tol, "Numeric tolerance");
  verify_cmd->add_flag("--json", as_json, "JSON output");

  // orbits
  std::string orbits_graph;
  std::optional<Vertex> orbits_fixed;
  bool orbits_json = false;
  auto* orbits_cmd = app.add_subcommand("orbits", "Automorphism orbits, optionally fixing a vertex");
  orbits_cmd->add_option("--graph", orbits_graph, "Edge list (default: stdin)");
  orbits_cmd->add_option("--fixed", orbits_fixed, "Vertex fixed by every automorphism");
  orbits_cmd->add_flag("--json", orbits_json, "JSON output");

  // induced
  std::string induced_graph;
  std::string induced_provenance;
  bool induced_json = false;
  auto* induced_cmd = app.add_subcommand("induced", "Eigenvalues lifted from the base graph of a construction");
  induced_cmd->add_option("--graph", induced_graph, "Constructed graph (edge list)")->required();
  induced_cmd->add_option("--from", induced_provenance, "Provenance JSON")->required();
  induced_cmd->add_option("--tol", tol, "Numeric tolerance");
  induced_cmd->add_flag("--json", induced_json, "JSON output");

  // reduce-multiplicity
  std::string reduce_graph;
  double eigenvalue = 0.0;
  std::string reduce_out;
  std::string reduce_dot;
  bool reduce_json = false;
  auto* reduce_cmd = app.add_subcommand("reduce-multiplicity", "Attach a pendant to lower an eigenvalue's multiplicity");
  reduce_cmd->add_option("--graph", reduce_graph, "Edge list (default: stdin)");
  reduce_cmd->add_option("--eigenvalue", eigenvalue, "Eigenvalue of A(G) with multiplicity above one")->required();
  reduce_cmd->add_option("--out", reduce_out, "Write the grown graph here");
  reduce_cmd->add_option("--dot", reduce_dot, "Write a DOT rendering here");
  reduce_cmd->add_flag("--json", reduce_json, "JSON output");

  // example
  std::string example_name;
  bool example_list = false;
  ConstructOptions example;
  auto* example_cmd = app.add_subcommand("example", "Print a bundled example graph");
  example_cmd->add_option("name", example_name, "Example name");
  example_cmd->add_flag("--list", example_list, "List the bundled examples");
  add_output_flags(example_cmd, example);

  // random
  std::uint64_t seed = 0;
  std::string random_kind = "a";
  RandomInstanceParams params;
  ConstructOptions random;
  auto* random_cmd = app.add_subcommand("random", "Seeded random construction");
  random_cmd->add_option("--seed", seed, "Seed")->required();
  random_cmd->add_option("--kind", random_kind, "a or l")->check(CLI::IsMember({"a", "l"}));
  random_cmd->add_option("--max-g", params.max_g, "Largest base graph")->check(CLI::PositiveNumber);
  random_cmd->add_option("--max-h", params.max_h, "Largest H");
  random_cmd->add_option("--density", params.density, "Edge probability")->check(CLI::Range(0.0, 1.0));
  add_output_flags(random_cmd, random);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*construct_cmd) {
      const Graph g = read_graph(construct.g_path);
      const Json spec = read_json(construct.spec_path);
      ConstructedGraph cg;
      if (*construct_a) {
        const Graph h = read_graph(construct.h_path);
        cg = build_a_cospectral(g, construct.fixed, h, attachments_from_json(spec), orbit_options());
      } else {
        cg = build_l_cospectral(g, construct.fixed, cross_edges_from_json(spec, g.order()), orbit_options());
      }
      emit_construction(cg, construct.out_path, construct.provenance_path, construct.dot_path);
      return kHolds;
    }

    if (*modify_cmd) {
      const ConstructedGraph cg = provenance_from_json(read_json(modify_provenance), read_graph(modify_graph));
      const ConstructedGraph out = connect_orbits(cg, orbit_index, bijection_from_json(read_json(bijection_path)));
      emit_construction(out, modify.out_path, modify.provenance_path, modify.dot_path);
      return kHolds;
    }

    if (*verify_cmd) {
      const Graph g = read_graph(verify_graph);
      const auto [u, v] = parse_pair(pair_text);
      if (full) {
        const FullReport r = verify_pair_full(g, u, v, tol);
        if (as_json) {
          std::cout << to_json(r, tol).dump(2) << "\n";
        } else {
          print_report(r.adjacency);
          print_report(r.laplacian);
          print_strong(r.strong);
        }
        return r.adjacency.cospectral && r.laplacian.cospectral ? kHolds : kFails;
      }
      if (strong) {
        if (matrix != "a") throw InputError("--strong applies to the adjacency matrix only");
        const StrongCospectralityResult r = check_strong_cospectrality(g, u, v, tol);
        if (as_json) {
          std::cout << to_json(r, tol).dump(2) << "\n";
        } else {
          print_strong(r);
        }
        return r.verdict == StrongVerdict::strong ? kHolds : kFails;
      }
      const CospectralityReport r = matrix == "a" ? verify_a_cospectral(g, u, v, tol) : verify_l_cospectral(g, u, v, tol);
      if (as_json) {
        std::cout << to_json(r).dump(2) << "\n";
      } else {
        print_report(r);
      }
      return r.cospectral ? kHolds : kFails;
    }

    if (*orbits_cmd) {
      const Graph g = read_graph(orbits_graph);
      const OrbitPartition p =
          orbits_fixed ? automorphism_orbits(g, *orbits_fixed, orbit_options()) : automorphism_orbits(g, orbit_options());
      if (orbits_json) {
        std::cout << to_json(p).dump(2) << "\n";
      } else {
        for (const auto& orbit : p.orbits) {
          for (std::size_t i = 0; i < orbit.size(); ++i) std::cout << (i ? " " : "") << orbit[i];
          std::cout << "\n";
        }
      }
      return kHolds;
    }

    if (*induced_cmd) {
      const ConstructedGraph cg = provenance_from_json(read_json(induced_provenance), read_graph(induced_graph));
      const StrongViaSimplicityResult r = strong_via_simplicity(cg, tol);
      if (induced_json) {
        Json j = to_json(r.pairs, tol);
        j["projection_residual"] = decimal(projection_residual(cg, r.pairs));
        j["verdict"] = to_string(r.verdict);
        j["direct"] = to_json(r.direct, tol);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "induced eigenvalues of pair (" << cg.pair.first << ", " << cg.pair.second << "):\n";
        for (const auto& p : r.pairs) {
          std::cout << "  " << decimal(p.eigenvalue) << "  multiplicity " << p.multiplicity_in_big
                    << (p.simple_in_big ? " (simple)" : "") << "  residual " << decimal(p.residual) << "\n";
        }
        std::cout << "projection residual: " << decimal(projection_residual(cg, r.pairs)) << "\n"
                  << "verdict: " << to_string(r.verdict) << "\n"
                  << "direct check: " << to_string(r.direct.verdict) << "\n";
      }
      return r.verdict == SimplicityVerdict::strong_certified ? kHolds : kFails;
    }

    if (*reduce_cmd) {
      const Graph g = read_graph(reduce_graph);
      const auto [grown, report] = attach_pendant_reduce(g, eigenvalue);
      if (!reduce_out.empty()) write_text(reduce_out, serialize_edge_list(grown));
      if (!reduce_dot.empty()) write_text(reduce_dot, to_dot(grown));
      if (reduce_json) {
        std::cout << to_json(report, Tolerances{}.root).dump(2) << "\n";
      } else {
        std::cout << "eigenvalue " << decimal(report.eigenvalue) << ": multiplicity " << report.multiplicity_before
                  << " -> " << report.multiplicity_after << "\n"
                  << "pendant " << report.pendant << " attached to " << report.attached_to << " (component "
                  << decimal(report.component) << ")\n"
                  << "interlacing gaps " << decimal(report.upper_gap) << ", " << decimal(report.lower_gap)
                  << (report.interlacing_strict ? " (strict)" : " (not strict)") << "\n";
        if (reduce_out.empty()) std::cout << serialize_edge_list(grown);
      }
      const bool reduced = report.multiplicity_after + 1 == report.multiplicity_before && report.interlacing_strict;
      return reduced ? kHolds : kFails;
    }

    if (*example_cmd) {
      if (example_list || example_name.empty()) {
        for (const auto& name : fixture_names()) std::cout << name << "\n";
        return kHolds;
      }
      const Fixture f = load_fixture(example_name);
      if (f.construction) {
        emit_construction(*f.construction, example.out_path, example.provenance_path, example.dot_path);
      } else {
        if (example.out_path.empty()) {
          std::cout << serialize_edge_list(f.graph);
        } else {
          write_text(example.out_path, serialize_edge_list(f.graph));
        }
        if (!example.dot_path.empty()) write_text(example.dot_path, to_dot(f.graph, f.pair));
        if (!example.provenance_path.empty()) {
          write_text(example.provenance_path,
                     Json{{"pair", {f.pair.first, f.pair.second}}, {"description", f.description}}.dump(2) + "\n");
        }
      }
      std::cerr << f.name << ": " << f.description << "; pair " << f.pair.first << "," << f.pair.second << "\n";
      return kHolds;
    }

    if (*random_cmd) {
      params.kind = random_kind == "a" ? ConstructionKind::adjacency : ConstructionKind::laplacian;
      const ConstructedGraph cg = random_instance(seed, params);
      emit_construction(cg, random.out_path, random.provenance_path, random.dot_path);
      return kHolds;
    }
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range, GraphError, ConstructionError and JSON
    // type errors all land here; internal consistency traps do too.
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

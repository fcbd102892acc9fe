#pragma once

// JSON encodings for construction specs, provenance sidecars and reports.

#include <json.hpp>
#include <string>
#include <vector>

#include "cospectra/constructions.hpp"
#include "cospectra/cospectrality.hpp"
#include "cospectra/induced.hpp"
#include "cospectra/spectral.hpp"

namespace cospectra {

using Json = nlohmann::ordered_json;

/// {"attachments":[{"side":1,"g":2,"h":0},...]}
std::vector<AttachmentEdge> attachments_from_json(const Json& j);
Json attachments_to_json(const std::vector<AttachmentEdge>& attachments);

/// {"cross":[[u, n+w],...]} in constructed-graph ids; `n` is the base order.
std::vector<CrossEdge> cross_edges_from_json(const Json& j, std::size_t n);
Json cross_edges_to_json(const std::vector<CrossEdge>& cross, std::size_t n);

/// {"bijection":[[a, b],...]} in constructed-graph ids.
std::vector<VertexPair> bijection_from_json(const Json& j);

Json provenance_to_json(const ConstructedGraph& cg);
/// Rebuilds the provenance around `graph`; the base is recovered from the
/// copy-1 block. Throws std::invalid_argument if the sidecar is inconsistent.
ConstructedGraph provenance_from_json(const Json& j, const Graph& graph);

Json to_json(const IntPolynomial& p);
Json to_json(const OrbitPartition& p);
Json to_json(const CospectralityReport& r);
Json to_json(const StrongCospectralityResult& r, double tol);
Json to_json(const FullReport& r, double tol);
Json to_json(const std::vector<InducedEigenpair>& pairs, double tol);
Json to_json(const PendantReport& r, double tol);

/// Shortest round-trip decimal form of x.
std::string decimal(double x);

}  // namespace cospectra

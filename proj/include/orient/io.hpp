#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "orient/constructors.hpp"
#include "orient/graph.hpp"
#include "orient/rational.hpp"
#include "orient/rounding.hpp"

namespace orient::io {

using Json = nlohmann::json;

// Graph text format: "n m" followed by m lines "u v", 0-based.
Graph read_graph_text(std::istream& in);
std::string write_graph_text(const Graph& g);

// {"n": n, "edges": [[u, v], ...]}
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

/// Reads either format; JSON is recognised by a leading '{'.
Graph load_graph(const std::string& path);
Json load_json(const std::string& path);

// {"mode": "outdeg" | "imbalance", "sets": [[...], ...]}
ForbiddenSets forbidden_from_json(const Json& j, const Graph& g);
Json forbidden_to_json(const ForbiddenSets& f);
ForbiddenMode parse_mode(const std::string& text);

// {"ordering": [...], "h_edges": [[u, v], ...], "slack": [...], "valid": bool}
// Only "ordering" and "h_edges" are read back; slack is recomputed.
Json certificate_to_json(const Graph& g, const HCertificate& cert);
Construction certificate_from_json(const Json& j, const Graph& g);

// {"rows": n, "cols": m, "entries": [[v, e, "p/q"], ...]}
Json matrix_to_json(const EdgeVertexMatrix& m);
EdgeVertexMatrix matrix_from_json(const Json& j, const Graph& g);

// {"size": m, "entries": ["p/q", ...]}
Json rational_vector_to_json(const std::vector<Rational>& v);
std::vector<Rational> rational_vector_from_json(const Json& j);

// {"n": n, "arcs": [[tail, head], ...]}, arcs aligned with the graph's edges.
Json orientation_to_json(const Orientation& d);
Orientation orientation_from_json(const Json& j, const Graph& g);
std::string orientation_to_dot(const Orientation& d);

/// Z_p certificate file: {"u": root, "arcs": [[tail, head], ...]} where the
/// arcs form an oriented edge multiset of G^(p-2).
struct ZpCertificateFile {
  Vertex root = 0;
  std::vector<Arc> arcs;
};
ZpCertificateFile zp_certificate_from_json(const Json& j);
Json zp_certificate_to_json(const ZpCertificateFile& cert);

}  // namespace orient::io

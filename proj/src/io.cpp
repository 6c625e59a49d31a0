#include "orient/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace orient::io {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Arc arc_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a [tail, head] pair");
  return {j[0].get<int>(), j[1].get<int>()};
}

EdgeId lookup_edge(const Graph& g, Vertex a, Vertex b) {
  const auto e = g.find_edge(a, b);
  if (!e) throw std::invalid_argument("no edge {" + std::to_string(a) + ", " + std::to_string(b) + "} in graph");
  return *e;
}

}  // namespace

Graph read_graph_text(std::istream& in) {
  int n = 0;
  int m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("graph text: bad header, expected \"n m\"");
  std::vector<Edge> edges(m);
  for (auto& e : edges) {
    if (!(in >> e.u >> e.v)) throw std::invalid_argument("graph text: fewer edge lines than announced");
  }
  return Graph(n, std::move(edges));
}

std::string write_graph_text(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& pair : j.at("edges")) {
    const Arc a = arc_from_json(pair);
    edges.push_back({a.tail, a.head});
  }
  return Graph(j.at("n").get<int>(), std::move(edges));
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(Json::parse(text));
  std::istringstream in(text);
  return read_graph_text(in);
}

Json load_json(const std::string& path) { return Json::parse(read_file(path)); }

ForbiddenMode parse_mode(const std::string& text) {
  if (text == "outdeg") return ForbiddenMode::OutDegree;
  if (text == "imbalance") return ForbiddenMode::Imbalance;
  throw std::invalid_argument("unknown forbidden mode '" + text + "' (expected outdeg or imbalance)");
}

ForbiddenSets forbidden_from_json(const Json& j, const Graph& g) {
  const ForbiddenMode mode = parse_mode(j.at("mode").get<std::string>());
  auto sets = j.at("sets").get<std::vector<std::vector<int>>>();
  return ForbiddenSets(g, mode, std::move(sets));
}

Json forbidden_to_json(const ForbiddenSets& f) {
  Json sets = Json::array();
  for (Vertex v = 0; v < f.num_vertices(); ++v) sets.push_back(f.at(v));
  return {{"mode", to_string(f.mode())}, {"sets", sets}};
}

Json certificate_to_json(const Graph& g, const HCertificate& cert) {
  Json h_edges = Json::array();
  for (EdgeId e : cert.h.edge_ids()) h_edges.push_back({g.edge(e).u, g.edge(e).v});
  return {{"ordering", std::vector<Vertex>(cert.ordering.sequence().begin(), cert.ordering.sequence().end())},
          {"h_edges", h_edges},
          {"slack", cert.slack},
          {"valid", cert.valid}};
}

Construction certificate_from_json(const Json& j, const Graph& g) {
  VertexOrdering ord(j.at("ordering").get<std::vector<Vertex>>());
  if (ord.size() != g.num_vertices()) throw std::invalid_argument("certificate: ordering length mismatch");
  std::vector<bool> bits(g.num_edges(), false);
  for (const auto& pair : j.at("h_edges")) {
    const Arc a = arc_from_json(pair);
    bits[lookup_edge(g, a.tail, a.head)] = true;
  }
  return {std::move(ord), Subgraph(g, std::move(bits))};
}

Json matrix_to_json(const EdgeVertexMatrix& m) {
  Json entries = Json::array();
  for (const auto& entry : m.entries()) entries.push_back({entry.v, entry.e, format_rational(entry.value)});
  return {{"rows", m.num_vertices()}, {"cols", m.num_edges()}, {"entries", entries}};
}

EdgeVertexMatrix matrix_from_json(const Json& j, const Graph& g) {
  if (j.at("rows").get<int>() != g.num_vertices() || j.at("cols").get<int>() != g.num_edges())
    throw std::invalid_argument("matrix: dimensions do not match the graph");
  std::vector<EdgeVertexMatrix::Entry> entries;
  for (const auto& item : j.at("entries")) {
    if (!item.is_array() || item.size() != 3) throw std::invalid_argument("matrix: entries are [v, e, \"p/q\"]");
    entries.push_back({item[0].get<int>(), item[1].get<int>(), parse_rational(item[2].get<std::string>())});
  }
  return EdgeVertexMatrix::from_entries(g, entries);
}

Json rational_vector_to_json(const std::vector<Rational>& v) {
  Json entries = Json::array();
  for (const auto& q : v) entries.push_back(format_rational(q));
  return {{"size", v.size()}, {"entries", entries}};
}

std::vector<Rational> rational_vector_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& item : j.at("entries")) out.push_back(parse_rational(item.get<std::string>()));
  if (j.contains("size") && j.at("size").get<std::size_t>() != out.size())
    throw std::invalid_argument("vector: size field disagrees with entry count");
  return out;
}

Json orientation_to_json(const Orientation& d) {
  Json arcs = Json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
  return {{"n", d.num_vertices()}, {"arcs", arcs}};
}

Orientation orientation_from_json(const Json& j, const Graph& g) {
  std::vector<Arc> arcs;
  for (const auto& pair : j.at("arcs")) arcs.push_back(arc_from_json(pair));
  return Orientation::from_arcs(g, std::move(arcs));
}

std::string orientation_to_dot(const Orientation& d) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (Vertex v = 0; v < d.num_vertices(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
  return out.str();
}

ZpCertificateFile zp_certificate_from_json(const Json& j) {
  ZpCertificateFile cert;
  cert.root = j.at("u").get<int>();
  for (const auto& pair : j.at("arcs")) cert.arcs.push_back(arc_from_json(pair));
  return cert;
}

Json zp_certificate_to_json(const ZpCertificateFile& cert) {
  Json arcs = Json::array();
  for (const Arc& a : cert.arcs) arcs.push_back({a.tail, a.head});
  return {{"u", cert.root}, {"arcs", arcs}};
}

}  // namespace orient::io

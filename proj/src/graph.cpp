#include "orient/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orient {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)), incident_(num_vertices < 0 ? 0 : num_vertices) {
  require(n_ >= 0, "graph: negative vertex count");
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const auto [u, v] = edges_[e];
    require(u >= 0 && u < n_ && v >= 0 && v < n_,
            "graph: edge " + std::to_string(e) + " has an endpoint out of range");
    require(u != v, "graph: self-loop at vertex " + std::to_string(u));
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }
  for (Vertex v = 0; v < n_; ++v) {
    std::vector<Vertex> nbrs;
    nbrs.reserve(incident_[v].size());
    for (EdgeId e : incident_[v]) nbrs.push_back(other(e, v));
    std::sort(nbrs.begin(), nbrs.end());
    require(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end(),
            "graph: duplicate edge at vertex " + std::to_string(v));
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& inc : incident_) best = std::max(best, static_cast<int>(inc.size()));
  return best;
}

Vertex Graph::other(EdgeId e, Vertex v) const {
  const Edge& ed = edges_.at(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw std::invalid_argument("graph: vertex is not an endpoint of the edge");
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return std::nullopt;
  for (EdgeId e : incident_[a]) {
    if (other(e, a) == b) return e;
  }
  return std::nullopt;
}

VertexOrdering::VertexOrdering(std::vector<Vertex> sequence)
    : sequence_(std::move(sequence)), position_(sequence_.size(), -1) {
  const int n = size();
  for (int pos = 0; pos < n; ++pos) {
    const Vertex v = sequence_[pos];
    require(v >= 0 && v < n, "ordering: vertex out of range");
    require(position_[v] < 0, "ordering: vertex listed twice");
    position_[v] = pos;
  }
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<Vertex> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  return VertexOrdering(std::move(seq));
}

VertexOrdering VertexOrdering::reversed() const {
  return VertexOrdering(std::vector<Vertex>(sequence_.rbegin(), sequence_.rend()));
}

VertexOrdering VertexOrdering::moved_to_front(Vertex v) const {
  std::vector<Vertex> seq;
  seq.reserve(sequence_.size());
  seq.push_back(v);
  for (Vertex w : sequence_) {
    if (w != v) seq.push_back(w);
  }
  return VertexOrdering(std::move(seq));
}

Orientation::Orientation(const Graph& g, const std::vector<bool>& reversed) {
  require(static_cast<int>(reversed.size()) == g.num_edges(),
          "orientation: need one direction bit per edge");
  std::vector<Arc> arcs;
  arcs.reserve(reversed.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    arcs.push_back(reversed[e] ? Arc{ed.v, ed.u} : Arc{ed.u, ed.v});
  }
  *this = Orientation(g.num_vertices(), std::move(arcs));
}

Orientation::Orientation(int num_vertices, std::vector<Arc> arcs)
    : n_(num_vertices), arcs_(std::move(arcs)), out_(num_vertices, 0), in_(num_vertices, 0) {
  for (const Arc& a : arcs_) {
    require(a.tail >= 0 && a.tail < n_ && a.head >= 0 && a.head < n_,
            "orientation: arc endpoint out of range");
    require(a.tail != a.head, "orientation: loop arc");
    ++out_[a.tail];
    ++in_[a.head];
  }
}

Orientation Orientation::from_arcs(const Graph& g, std::vector<Arc> arcs) {
  require(static_cast<int>(arcs.size()) == g.num_edges(),
          "orientation: arc count differs from edge count");
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const Arc& a = arcs[e];
    const bool fwd = a.tail == ed.u && a.head == ed.v;
    const bool bwd = a.tail == ed.v && a.head == ed.u;
    require(fwd || bwd, "orientation: arc " + std::to_string(e) + " does not match its edge");
  }
  return Orientation(g.num_vertices(), std::move(arcs));
}

ForbiddenSets::ForbiddenSets(const Graph& g, ForbiddenMode mode, std::vector<std::vector<int>> sets)
    : mode_(mode), sets_(std::move(sets)) {
  require(static_cast<int>(sets_.size()) == g.num_vertices(),
          "forbidden sets: need one set per vertex");
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto& s = sets_[v];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const int deg = g.degree(v);
    const auto reachable = [&](int value) {
      if (mode_ == ForbiddenMode::OutDegree) return value >= 0 && value <= deg;
      return value >= -deg && value <= deg && ((value + deg) % 2 == 0);
    };
    const auto before = s.size();
    s.erase(std::remove_if(s.begin(), s.end(), [&](int x) { return !reachable(x); }), s.end());
    dropped_ += static_cast<int>(before - s.size());
  }
}

ForbiddenSets ForbiddenSets::none(const Graph& g, ForbiddenMode mode) {
  return ForbiddenSets(g, mode, std::vector<std::vector<int>>(g.num_vertices()));
}

bool ForbiddenSets::forbids(Vertex v, int value) const {
  const auto& s = sets_.at(v);
  return std::binary_search(s.begin(), s.end(), value);
}

Subgraph::Subgraph(const Graph& g, std::vector<bool> included) : included_(std::move(included)) {
  require(static_cast<int>(included_.size()) == g.num_edges(),
          "subgraph: need one inclusion bit per edge");
}

Subgraph Subgraph::empty(const Graph& g) { return Subgraph(g, std::vector<bool>(g.num_edges(), false)); }

Subgraph Subgraph::full(const Graph& g) { return Subgraph(g, std::vector<bool>(g.num_edges(), true)); }

int Subgraph::num_edges() const {
  return static_cast<int>(std::count(included_.begin(), included_.end(), true));
}

std::vector<EdgeId> Subgraph::edge_ids() const {
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < host_edges(); ++e) {
    if (included_[e]) ids.push_back(e);
  }
  return ids;
}

std::vector<SideDegrees> left_right_degrees(const Graph& g, const VertexOrdering& ord,
                                            const Subgraph* sub) {
  require(ord.size() == g.num_vertices(), "left_right_degrees: ordering length mismatch");
  require(sub == nullptr || sub->host_edges() == g.num_edges(),
          "left_right_degrees: subgraph is over a different graph");
  std::vector<SideDegrees> out(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (sub != nullptr && !sub->contains(e)) continue;
    auto [a, b] = g.edge(e);
    if (ord.before(b, a)) std::swap(a, b);
    ++out[a].right;
    ++out[b].left;
  }
  return out;
}

int imbalance(const Orientation& d, Vertex v) { return d.out_degree(v) - d.in_degree(v); }

bool is_f_avoiding(const Orientation& d, const ForbiddenSets& f) {
  require(f.num_vertices() == d.num_vertices(), "is_f_avoiding: vertex count mismatch");
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    const int stat = f.mode() == ForbiddenMode::OutDegree ? d.out_degree(v) : imbalance(d, v);
    if (f.forbids(v, stat)) return false;
  }
  return true;
}

ForbiddenSets convert_to_imbalance(const ForbiddenSets& f, const Graph& g) {
  require(f.mode() == ForbiddenMode::OutDegree, "convert_to_imbalance: expects out-degree mode");
  require(f.num_vertices() == g.num_vertices(), "convert_to_imbalance: vertex count mismatch");
  std::vector<std::vector<int>> sets(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (int a : f.at(v)) sets[v].push_back(2 * a - g.degree(v));
  }
  return ForbiddenSets(g, ForbiddenMode::Imbalance, std::move(sets));
}

Orientation balanced_orientation(const Graph& g) {
  // Pair odd-degree vertices through an auxiliary vertex, then orient every
  // edge along an Euler circuit of each component.
  const int n = g.num_vertices();
  const Vertex hub = n;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) % 2 == 1) edges.push_back({v, hub});
  }
  std::vector<std::vector<int>> inc(n + 1);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    inc[edges[e].u].push_back(e);
    inc[edges[e].v].push_back(e);
  }
  std::vector<bool> used(edges.size(), false);
  std::vector<bool> reversed(g.num_edges(), false);
  std::vector<std::size_t> cursor(n + 1, 0);
  for (Vertex start = 0; start <= n; ++start) {
    // Iterative Hierholzer; each edge is oriented in the direction it is walked.
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      auto& c = cursor[v];
      while (c < inc[v].size() && used[inc[v][c]]) ++c;
      if (c == inc[v].size()) {
        stack.pop_back();
        continue;
      }
      const int e = inc[v][c];
      used[e] = true;
      const Vertex w = edges[e].u == v ? edges[e].v : edges[e].u;
      if (e < g.num_edges()) reversed[e] = edges[e].u != v;
      stack.push_back(w);
    }
  }
  return Orientation(g, reversed);
}

std::string to_string(ForbiddenMode mode) {
  return mode == ForbiddenMode::OutDegree ? "outdeg" : "imbalance";
}

}  // namespace orient

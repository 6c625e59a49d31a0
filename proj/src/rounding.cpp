#include "orient/rounding.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace orient {

namespace {

Rational abs_value(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

bool is_fractional(const Rational& q) { return sgn(q) > 0 && q < 1; }

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

struct Cycle {
  std::vector<Vertex> vertices;  // in cycle order
  std::vector<EdgeId> edges;     // edges[j] joins vertices[j] and vertices[j+1 mod k]
};

// First cycle closed when the fractional edges are added to a spanning
// forest in index order; empty when the fractional support is a forest.
std::optional<Cycle> first_fractional_cycle(const EdgeVertexMatrix& m, const std::vector<Rational>& z) {
  const int n = m.num_vertices();
  DisjointSets dsu(n);
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> forest(n);
  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    if (!is_fractional(z[e])) continue;
    const auto [a, b] = m.edge(e);
    if (dsu.unite(a, b)) {
      forest[a].emplace_back(b, e);
      forest[b].emplace_back(a, e);
      continue;
    }
    // Tree path from a to b, then the closing edge back to a.
    std::vector<EdgeId> via(n, -1);
    std::vector<Vertex> prev(n, -1);
    std::queue<Vertex> queue;
    queue.push(a);
    prev[a] = a;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      if (x == b) break;
      for (const auto& [w, f] : forest[x]) {
        if (prev[w] >= 0) continue;
        prev[w] = x;
        via[w] = f;
        queue.push(w);
      }
    }
    Cycle c;
    for (Vertex x = b; x != a; x = prev[x]) {
      c.vertices.push_back(x);
      c.edges.push_back(via[x]);
    }
    c.vertices.push_back(a);
    std::reverse(c.vertices.begin(), c.vertices.end());
    std::reverse(c.edges.begin(), c.edges.end());
    c.edges.push_back(e);
    const auto low = std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin();
    std::rotate(c.vertices.begin(), c.vertices.begin() + low, c.vertices.end());
    std::rotate(c.edges.begin(), c.edges.begin() + low, c.edges.end());
    return c;
  }
  return std::nullopt;
}

int count_fractional(const std::vector<Rational>& z) {
  return static_cast<int>(std::count_if(z.begin(), z.end(), is_fractional));
}

}  // namespace

EdgeVertexMatrix::EdgeVertexMatrix(const Graph& g, std::vector<std::pair<Rational, Rational>> columns)
    : n_(g.num_vertices()),
      edges_(g.edges().begin(), g.edges().end()),
      columns_(std::move(columns)),
      bounds_(g.num_vertices()) {
  if (static_cast<int>(columns_.size()) != g.num_edges())
    throw std::invalid_argument("edge-vertex matrix: need one column per edge");
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const auto& [cu, cv] = columns_[e];
    bounds_[edges_[e].u] = std::max(bounds_[edges_[e].u], abs_value(cu));
    bounds_[edges_[e].v] = std::max(bounds_[edges_[e].v], abs_value(cv));
  }
}

EdgeVertexMatrix EdgeVertexMatrix::from_entries(const Graph& g, std::span<const Entry> entries) {
  std::vector<std::pair<Rational, Rational>> columns(g.num_edges());
  for (const Entry& entry : entries) {
    if (entry.e < 0 || entry.e >= g.num_edges() || entry.v < 0 || entry.v >= g.num_vertices())
      throw std::invalid_argument("edge-vertex matrix: entry index out of range");
    const Edge& ed = g.edge(entry.e);
    if (entry.v == ed.u) {
      columns[entry.e].first = entry.value;
    } else if (entry.v == ed.v) {
      columns[entry.e].second = entry.value;
    } else if (sgn(entry.value) != 0) {
      throw std::invalid_argument("edge-vertex matrix: nonzero entry at vertex " +
                                  std::to_string(entry.v) + " which is not an endpoint of edge " +
                                  std::to_string(entry.e));
    }
  }
  return EdgeVertexMatrix(g, std::move(columns));
}

EdgeVertexMatrix EdgeVertexMatrix::ordered(const Graph& g, const VertexOrdering& ord,
                                           const Rational& earlier, const Rational& later) {
  if (ord.size() != g.num_vertices()) throw std::invalid_argument("edge-vertex matrix: ordering length mismatch");
  std::vector<std::pair<Rational, Rational>> columns;
  columns.reserve(g.num_edges());
  for (const Edge& ed : g.edges()) {
    if (ord.before(ed.u, ed.v)) {
      columns.emplace_back(earlier, later);
    } else {
      columns.emplace_back(later, earlier);
    }
  }
  return EdgeVertexMatrix(g, std::move(columns));
}

Rational EdgeVertexMatrix::at(Vertex v, EdgeId e) const {
  const Edge& ed = edges_.at(e);
  if (v == ed.u) return columns_[e].first;
  if (v == ed.v) return columns_[e].second;
  return 0;
}

std::vector<Rational> EdgeVertexMatrix::apply(std::span<const Rational> y) const {
  if (static_cast<int>(y.size()) != num_edges()) throw std::invalid_argument("edge-vertex matrix: vector length mismatch");
  std::vector<Rational> x(n_);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (sgn(y[e]) == 0) continue;
    x[edges_[e].u] += columns_[e].first * y[e];
    x[edges_[e].v] += columns_[e].second * y[e];
  }
  return x;
}

std::vector<EdgeVertexMatrix::Entry> EdgeVertexMatrix::entries() const {
  std::vector<Entry> out;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (sgn(columns_[e].first) != 0) out.push_back({edges_[e].u, e, columns_[e].first});
    if (sgn(columns_[e].second) != 0) out.push_back({edges_[e].v, e, columns_[e].second});
  }
  return out;
}

FractionalEdgeVector::FractionalEdgeVector(std::vector<Rational> values) : values_(std::move(values)) {
  for (const auto& q : values_) {
    if (sgn(q) < 0 || q > 1) throw std::invalid_argument("fractional edge vector: entry outside [0, 1]");
  }
}

FractionalEdgeVector FractionalEdgeVector::constant(int m, const Rational& value) {
  return FractionalEdgeVector(std::vector<Rational>(m, value));
}

std::vector<Rational> cycle_relief_vector(const RationalMatrix& block, int pivot_row) {
  const int k = block.rows();
  if (!block.square()) throw std::invalid_argument("cycle relief: block is not square");
  if (k < 3) throw std::invalid_argument("cycle relief: a cycle has at least three edges");
  if (pivot_row < 0 || pivot_row >= k) throw std::invalid_argument("cycle relief: pivot row out of range");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const bool on_cycle = i == j || i == (j + 1) % k;
      if (!on_cycle && sgn(block(i, j)) != 0)
        throw std::invalid_argument("cycle relief: block is not a cycle submatrix");
    }

  if (auto null = nullspace_vector(block); !null.empty()) return null;
  std::vector<Rational> unit(k);
  unit[pivot_row] = 1;
  auto alpha = solve_nonsingular(block, std::move(unit));
  if (alpha.empty()) throw std::logic_error("cycle relief: nonsingular block without solution");
  return alpha;
}

std::vector<bool> round(const EdgeVertexMatrix& m, const FractionalEdgeVector& y, RoundingStats* stats) {
  if (y.size() != m.num_edges()) throw std::invalid_argument("round: vector length differs from edge count");
  std::vector<Rational> z(y.values().begin(), y.values().end());
  RoundingStats local;

  int fractional = count_fractional(z);
  while (auto cycle = first_fractional_cycle(m, z)) {
    const int k = static_cast<int>(cycle->vertices.size());
    RationalMatrix block(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) block(i, j) = m.at(cycle->vertices[i], cycle->edges[j]);
    const auto alpha = cycle_relief_vector(block, 0);

    const auto relief = block.multiply(alpha);
    if (std::any_of(relief.begin(), relief.end(), [](const Rational& q) { return sgn(q) < 0; }))
      throw std::logic_error("round: cycle direction decreases a vertex coordinate");

    // Largest step keeping every cycle coordinate inside [0, 1].
    std::optional<Rational> step;
    for (int j = 0; j < k; ++j) {
      const Rational& zj = z[cycle->edges[j]];
      const int s = sgn(alpha[j]);
      if (s == 0) continue;
      Rational limit = s > 0 ? Rational((1 - zj) / alpha[j]) : Rational(zj / -alpha[j]);
      if (!step || limit < *step) step = limit;
    }
    if (!step) throw std::logic_error("round: unbounded step along cycle direction");
    for (int j = 0; j < k; ++j) z[cycle->edges[j]] += *step * alpha[j];

    const int now = count_fractional(z);
    if (now >= fractional) throw std::logic_error("round: fractional support did not shrink");
    fractional = now;
    ++local.cycle_steps;
  }

  // The fractional support is a forest; peel leaves in vertex order.
  std::vector<int> frac_degree(m.num_vertices(), 0);
  std::vector<std::vector<EdgeId>> frac_edges(m.num_vertices());
  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    if (!is_fractional(z[e])) continue;
    for (Vertex w : {m.edge(e).u, m.edge(e).v}) {
      ++frac_degree[w];
      frac_edges[w].push_back(e);
    }
  }
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < m.num_vertices(); ++v) {
    if (frac_degree[v] == 1) leaves.insert(v);
  }
  while (!leaves.empty()) {
    const Vertex v = *leaves.begin();
    leaves.erase(leaves.begin());
    EdgeId e = -1;
    for (EdgeId f : frac_edges[v]) {
      if (is_fractional(z[f])) {
        e = f;
        break;
      }
    }
    if (e < 0) throw std::logic_error("round: leaf without a fractional edge");
    const Vertex u = m.edge(e).u == v ? m.edge(e).v : m.edge(e).u;
    z[e] = sgn(m.at(u, e)) > 0 ? 1 : 0;
    frac_degree[v] = 0;
    if (--frac_degree[u] == 1) {
      leaves.insert(u);
    } else if (frac_degree[u] == 0) {
      leaves.erase(u);
    }
    ++local.leaf_steps;
  }

  std::vector<bool> out(z.size());
  for (std::size_t e = 0; e < z.size(); ++e) {
    if (is_fractional(z[e])) throw std::logic_error("round: fractional coordinate left after peeling");
    out[e] = z[e] == 1;
  }
  if (stats != nullptr) *stats = local;
  return out;
}

}  // namespace orient

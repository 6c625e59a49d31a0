#include "orient/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "orient/guard.hpp"

namespace orient {

namespace {

// Smallest-last order: repeatedly remove a minimum-degree vertex (lowest
// index on ties); the result lists vertices in reverse removal order.
std::vector<Vertex> smallest_last_order(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> removal;
  removal.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    }
    removed[pick] = true;
    removal.push_back(pick);
    for (EdgeId e : g.incident(pick)) {
      const Vertex w = g.other(e, pick);
      if (!removed[w]) --deg[w];
    }
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

class OrientationSearch {
 public:
  OrientationSearch(const Graph& g, const ForbiddenSets& f) : g_(g) {
    const int n = g.num_vertices();
    allowed_prefix_.resize(n);
    remaining_.resize(n);
    out_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      const int deg = g.degree(v);
      remaining_[v] = deg;
      auto& prefix = allowed_prefix_[v];
      prefix.assign(deg + 2, 0);
      for (int k = 0; k <= deg; ++k) {
        const int stat = f.mode() == ForbiddenMode::OutDegree ? k : 2 * k - deg;
        prefix[k + 1] = prefix[k] + (f.forbids(v, stat) ? 0 : 1);
      }
    }
    const auto order = smallest_last_order(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (EdgeId e = 0; e < g.num_edges(); ++e) decisions_.push_back(e);
    std::stable_sort(decisions_.begin(), decisions_.end(), [&](EdgeId x, EdgeId y) {
      const auto later = [&](EdgeId e) { return std::max(pos[g.edge(e).u], pos[g.edge(e).v]); };
      return later(x) < later(y);
    });
    reversed_.assign(g.num_edges(), false);
  }

  bool solve() {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (!feasible(v)) return false;
    }
    return descend(0);
  }

  Orientation witness() const { return Orientation(g_, reversed_); }

 private:
  bool feasible(Vertex v) const {
    const auto& prefix = allowed_prefix_[v];
    return prefix[out_[v] + remaining_[v] + 1] - prefix[out_[v]] > 0;
  }

  bool descend(std::size_t i) {
    if (i == decisions_.size()) return true;
    const EdgeId e = decisions_[i];
    const auto [u, v] = g_.edge(e);
    --remaining_[u];
    --remaining_[v];
    for (const bool flip : {false, true}) {
      const Vertex tail = flip ? v : u;
      reversed_[e] = flip;
      ++out_[tail];
      if (feasible(u) && feasible(v) && descend(i + 1)) return true;
      --out_[tail];
    }
    reversed_[e] = false;
    ++remaining_[u];
    ++remaining_[v];
    return false;
  }

  const Graph& g_;
  std::vector<std::vector<int>> allowed_prefix_;
  std::vector<int> remaining_;
  std::vector<int> out_;
  std::vector<EdgeId> decisions_;
  std::vector<bool> reversed_;
};

int mod(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

}  // namespace

std::optional<Orientation> find_orientation(const Graph& g, const ForbiddenSets& f, SearchLimits limits) {
  if (f.num_vertices() != g.num_vertices())
    throw std::invalid_argument("find_orientation: forbidden sets cover a different vertex count");
  enforce_guard("find_orientation edges", g.num_edges(), limits.max_edges);
  OrientationSearch search(g, f);
  if (!search.solve()) return std::nullopt;
  return search.witness();
}

std::optional<std::vector<int>> find_b_flow(const Graph& g, int p, std::span<const int> b) {
  if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("find_b_flow: p must be a prime <= 5");
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("find_b_flow: need one boundary value per vertex");
  long long total = 0;
  for (int x : b) total += x;
  if (mod(total, p) != 0) throw std::invalid_argument("find_b_flow: boundary does not sum to zero mod p");
  const double space = std::pow(static_cast<double>(p - 1), m);
  enforce_guard("find_b_flow assignments (p-1)^m",
                space > 9e18 ? std::numeric_limits<long long>::max() : static_cast<long long>(space), 10'000'000);

  // Edges by later endpoint; a vertex is checked once its last edge is set.
  std::vector<EdgeId> order(m);
  for (EdgeId e = 0; e < m; ++e) order[e] = e;
  const auto later = [&](EdgeId e) { return std::max(g.edge(e).u, g.edge(e).v); };
  std::stable_sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) { return later(x) < later(y); });
  std::vector<int> last_use(n, -1);
  for (int i = 0; i < m; ++i) {
    last_use[g.edge(order[i]).u] = i;
    last_use[g.edge(order[i]).v] = i;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (last_use[v] < 0 && mod(b[v], p) != 0) return std::nullopt;
  }

  std::vector<int> phi(m, 0);
  std::vector<int> net(n, 0);
  const auto descend = [&](auto&& self, int i) -> bool {
    if (i == m) return true;
    const EdgeId e = order[i];
    const auto [u, v] = g.edge(e);
    for (int value = 1; value < p; ++value) {
      phi[e] = value;
      net[u] = mod(net[u] + value, p);
      net[v] = mod(net[v] - value, p);
      const bool ok = (last_use[u] != i || net[u] == mod(b[u], p)) && (last_use[v] != i || net[v] == mod(b[v], p));
      if (ok && self(self, i + 1)) return true;
      net[u] = mod(net[u] - value, p);
      net[v] = mod(net[v] + value, p);
    }
    phi[e] = 0;
    return false;
  };
  if (!descend(descend, 0)) return std::nullopt;
  return phi;
}

bool frank_gyarfas_check(const Graph& g, std::span<const int> lower, std::span<const int> upper) {
  const int n = g.num_vertices();
  if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n)
    throw std::invalid_argument("frank_gyarfas_check: need one bound per vertex");
  for (Vertex v = 0; v < n; ++v) {
    if (lower[v] > upper[v]) throw std::invalid_argument("frank_gyarfas_check: a(v) > b(v) at vertex " + std::to_string(v));
  }
  enforce_guard("frank_gyarfas_check vertices", n, 20);
  if (n > 62) throw std::invalid_argument("frank_gyarfas_check: too many vertices for subset enumeration");

  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    long sum_a = 0;
    long sum_b = 0;
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) {
        sum_a += lower[v];
        sum_b += upper[v];
      }
    }
    long inside = 0;
    long cut = 0;
    for (const Edge& ed : g.edges()) {
      const bool in_u = (mask >> ed.u) & 1U;
      const bool in_v = (mask >> ed.v) & 1U;
      if (in_u && in_v) {
        ++inside;
      } else if (in_u != in_v) {
        ++cut;
      }
    }
    if (sum_a - cut > inside || inside > sum_b) return false;
  }
  return true;
}

}  // namespace orient

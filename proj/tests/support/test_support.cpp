#include "support/test_support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "orient/generators.hpp"

namespace orient::testing {

namespace {

// Isomorphism-invariant vertex colours by iterated degree refinement.
std::vector<int> refined_colours(int n, const std::vector<std::vector<bool>>& adj) {
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = static_cast<int>(std::count(adj[v].begin(), adj[v].end(), true));
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int w = 0; w < n; ++w) {
        if (adj[v][w]) sig[v].second.push_back(colour[w]);
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (next == colour) break;
    colour = std::move(next);
  }
  return colour;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 11) throw std::invalid_argument("canonical_code: at most 11 vertices");
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  const auto colour = refined_colours(n, adj);

  // Positions are filled colour class by colour class; only permutations
  // within a class are tried.
  std::vector<int> by_colour(n);
  std::iota(by_colour.begin(), by_colour.end(), 0);
  std::stable_sort(by_colour.begin(), by_colour.end(), [&](int a, int b) { return colour[a] < colour[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in by_colour
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[by_colour[j]] == colour[by_colour[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = UINT64_MAX;
  std::vector<int> slot = by_colour;  // slot[pos] = vertex
  const auto encode = [&]() {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code = (code << 1) | (adj[slot[i]][slot[j]] ? 1U : 0U);
    return code;
  };
  const auto permute = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      best = std::min(best, encode());
      return;
    }
    auto [b, e] = cells[cell];
    std::sort(slot.begin() + b, slot.begin() + e);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(slot.begin() + b, slot.begin() + e));
  };
  permute(permute, 0);
  return (static_cast<std::uint64_t>(n) << 56) | best;
}

std::vector<Graph> connected_graphs(int max_edges) {
  std::vector<Graph> all;
  std::vector<Graph> level{Graph(2, {{0, 1}})};
  for (int m = 1; m <= max_edges; ++m) {
    all.insert(all.end(), level.begin(), level.end());
    if (m == max_edges) break;
    std::map<std::uint64_t, Graph> next;
    for (const Graph& g : level) {
      const int n = g.num_vertices();
      std::vector<Edge> base(g.edges().begin(), g.edges().end());
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.find_edge(u, v)) continue;
          auto edges = base;
          edges.push_back({u, v});
          Graph h(n, std::move(edges));
          next.emplace(canonical_code(h), std::move(h));
        }
        auto edges = base;
        edges.push_back({u, n});
        Graph h(n + 1, std::move(edges));
        next.emplace(canonical_code(h), std::move(h));
      }
    }
    level.clear();
    for (auto& [code, h] : next) level.push_back(std::move(h));
  }
  return all;
}

bool for_each_orientation(const Graph& g, const std::function<bool(const Orientation&)>& visit) {
  const int m = g.num_edges();
  if (m > 30) throw std::invalid_argument("for_each_orientation: too many edges");
  std::vector<bool> reversed(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (int e = 0; e < m; ++e) reversed[e] = (mask >> e) & 1U;
    if (visit(Orientation(g, reversed))) return true;
  }
  return false;
}

bool brute_force_avoiding_exists(const Graph& g, const ForbiddenSets& f) {
  return for_each_orientation(g, [&](const Orientation& d) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const int stat = f.mode() == ForbiddenMode::OutDegree ? d.out_degree(v) : d.out_degree(v) - d.in_degree(v);
      if (std::find(f.at(v).begin(), f.at(v).end(), stat) != f.at(v).end()) return false;
    }
    return true;
  });
}

bool brute_force_bounded_exists(const Graph& g, const std::vector<int>& lower, const std::vector<int>& upper) {
  return for_each_orientation(g, [&](const Orientation& d) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (d.out_degree(v) < lower[v] || d.out_degree(v) > upper[v]) return false;
    }
    return true;
  });
}

Rational permanent_by_permutations(const RationalMatrix& a) {
  if (!a.square()) throw std::invalid_argument("permanent_by_permutations: not square");
  const int n = a.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (int i = 0; i < n && sgn(term) != 0; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

ForbiddenSets random_forbidden(const Graph& g, ForbiddenMode mode, const std::vector<int>& sizes,
                               std::mt19937_64& rng) {
  std::vector<std::vector<int>> sets(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int deg = g.degree(v);
    std::vector<int> pool;
    for (int k = 0; k <= deg; ++k) pool.push_back(mode == ForbiddenMode::OutDegree ? k : 2 * k - deg);
    const int take = std::min<int>(std::max(sizes[v], 0), static_cast<int>(pool.size()));
    for (int i = 0; i < take; ++i) {
      const int j = uniform_int(rng, i, static_cast<int>(pool.size()) - 1);
      std::swap(pool[i], pool[j]);
      sets[v].push_back(pool[i]);
    }
  }
  return ForbiddenSets(g, mode, std::move(sets));
}

}  // namespace orient::testing

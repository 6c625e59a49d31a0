#include "orient/generators.hpp"

#include <stdexcept>

namespace orient {

bool bernoulli(std::mt19937_64& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Graph complete_graph(int n) {
  if (n < 0) throw std::invalid_argument("complete_graph: negative order");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

Graph complete_minus_matching(int n) {
  if (n < 0) throw std::invalid_argument("complete_minus_matching: negative order");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (u % 2 == 0 && v == u + 1) continue;
      edges.push_back({u, v});
    }
  return Graph(n, std::move(edges));
}

Graph random_bipartite(int left, int right, double p, std::mt19937_64& rng) {
  if (left < 0 || right < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("random_bipartite: bad parameters");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < left; ++u)
    for (Vertex v = left; v < left + right; ++v) {
      if (bernoulli(rng, p)) edges.push_back({u, v});
    }
  return Graph(left + right, std::move(edges));
}

Graph random_gnp(int n, double p, std::mt19937_64& rng) {
  if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("random_gnp: bad parameters");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) edges.push_back({u, v});
    }
  return Graph(n, std::move(edges));
}

Orientation random_orientation(const Graph& g, std::mt19937_64& rng) {
  std::vector<bool> reversed(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) reversed[e] = (rng() >> 63) != 0;
  return Orientation(g, reversed);
}

}  // namespace orient

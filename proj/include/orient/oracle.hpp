#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

struct SearchLimits {
  int max_edges = 26;
};

/// Backtracking search for an F-avoiding orientation.
///
/// Edges are decided grouped by their later endpoint in a smallest-last
/// (degeneracy) vertex order, trying edge.u -> edge.v before the reverse.
/// A branch is cut once some vertex has no allowed out-degree left within
/// [current, current + undecided]. The witness is the lexicographically
/// least one in that decision order; std::nullopt means UNSAT.
std::optional<Orientation> find_orientation(const Graph& g, const ForbiddenSets& f, SearchLimits limits = {});

/// Edge values phi(e) in {1, ..., p-1} with
///   sum_{e out of v} phi(e) - sum_{e into v} phi(e) = b(v)  (mod p),
/// each edge taken in its reference direction edge.u -> edge.v.
/// Requires p <= 5 prime, (p-1)^m <= 10^7 and a zero-sum b.
std::optional<std::vector<int>> find_b_flow(const Graph& g, int p, std::span<const int> b);

/// Subset condition for an orientation with a(v) <= deg+(v) <= b(v):
///   sum_U a - e(U, V\U) <= |E(G[U])| <= sum_U b  for every U.
/// Enumerates all 2^n subsets; guarded at n <= 20.
bool frank_gyarfas_check(const Graph& g, std::span<const int> lower, std::span<const int> upper);

}  // namespace orient

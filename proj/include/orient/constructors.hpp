#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "orient/graph.hpp"
#include "orient/rational.hpp"

namespace orient {

/// Ordering and spanning subgraph H together with the per-vertex slack
///   deg_G^L(v) - 2 deg_H^L(v) + deg_H^R(v) - |F(v)|.
/// Nonnegative slack everywhere guarantees an F-avoiding orientation.
struct HCertificate {
  VertexOrdering ordering;
  Subgraph h;
  std::vector<long> slack;
  bool valid = false;
};

/// An (ordering, H) pair produced by one of the constructions.
struct Construction {
  VertexOrdering ordering;
  Subgraph h;
};

/// deg_G^L(v) - 2 deg_H^L(v) + deg_H^R(v) per vertex.
std::vector<long> certificate_weights(const Graph& g, const VertexOrdering& ord, const Subgraph& h);

HCertificate certify_h_condition(const Graph& g, const VertexOrdering& ord, const Subgraph& h,
                                 const ForbiddenSets& f);

/// Rounds y = 1/3 against the matrix with column (1 at v_i, -2 at v_j) for
/// every edge v_i v_j, i < j. The resulting weights are at least
/// floor(deg(v) / 3) - 1.
Construction build_h_third(const Graph& g, const VertexOrdering& ord);
Construction build_h_third(const Graph& g);

/// floor(deg / 3) - 1.
int third_guarantee(int degree);

/// Arcs of `d` that go from an earlier to a later vertex of `ord`.
int count_forward_edges(const Orientation& d, const VertexOrdering& ord);

/// Local search for an ordering in which every vertex has at least as many
/// backward out-arcs as forward in-arcs among its left neighbours. A
/// violating vertex is moved to the front, which strictly lowers the
/// number of forward arcs.
VertexOrdering minimize_forward_edges(const Graph& g, const Orientation& d);
VertexOrdering minimize_forward_edges(const Graph& g, const Orientation& d, VertexOrdering start);

/// Uses the ordering from `minimize_forward_edges` and rounds y = 2/3 on
/// forward arcs, 0 on backward arcs. Weights are at least
/// floor(2 deg+_D(v) / 3) - 1.
Construction build_h_two_thirds(const Graph& g, const Orientation& d);

/// floor(2 * out_degree / 3) - 1.
int two_thirds_guarantee(int out_degree);

// Randomized construction on the region x <= a, y >= a + ((1 - a) / a) x with
// a = sqrt(2) - 1. There (1 - a) / a = sqrt(2) and a / (1 - a) = 1 / sqrt(2),
// so every test reduces to comparing squares of dyadic or rational numbers
// and is evaluated exactly.

struct RandomOptions {
  Rational gamma{1, 10};
  std::uint64_t seed = 0;
  int max_attempts = 200;
};

struct RandomSuccess {
  Construction construction;
  int attempt = 0;  // 0-based index of the accepted attempt
};

struct RandomFailure {
  int attempts = 0;
  int worst_attempt = -1;
  /// Diagnostics of the attempt with the most violating vertices.
  std::vector<long> weights;
  std::vector<bool> vertex_ok;
  int violations = 0;
};

using RandomResult = std::variant<RandomSuccess, RandomFailure>;

RandomResult build_h_random(const Graph& g, const RandomOptions& options);

/// Acceptance test (sqrt(2) - 1 - 2 gamma) * degree < weight, exact.
/// Isolated vertices impose no condition.
bool random_vertex_accepted(const Rational& gamma, int degree, long weight);

/// floor((sqrt(2) - 1 - 2 gamma) * degree), exact.
long random_guarantee(const Rational& gamma, int degree);

/// Exact comparisons against sqrt(2) - 1.
bool less_than_sqrt2_minus_1(const Rational& q);
bool greater_than_sqrt2_minus_1(const Rational& q);

}  // namespace orient

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "orient/graph.hpp"
#include "orient/rational.hpp"

namespace orient {

/// Vertex-by-edge matrix whose column for edge e is supported on the two
/// endpoints of e. Stored as the pair of endpoint coefficients per column.
class EdgeVertexMatrix {
 public:
  struct Entry {
    Vertex v = 0;
    EdgeId e = 0;
    Rational value;
  };

  EdgeVertexMatrix() = default;
  /// `columns[e]` holds the coefficients at edge(e).u and edge(e).v.
  EdgeVertexMatrix(const Graph& g, std::vector<std::pair<Rational, Rational>> columns);

  /// Builds from a sparse entry list. A nonzero entry at a vertex that is
  /// not an endpoint of its edge violates the zero pattern and throws.
  static EdgeVertexMatrix from_entries(const Graph& g, std::span<const Entry> entries);

  /// Column of edge v_i v_j (i < j) is `earlier` at v_i and `later` at v_j.
  static EdgeVertexMatrix ordered(const Graph& g, const VertexOrdering& ord, const Rational& earlier,
                                  const Rational& later);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// m_ve; zero when v is not an endpoint of e.
  Rational at(Vertex v, EdgeId e) const;
  /// b_v = max_e |m_ve|.
  const Rational& bound(Vertex v) const { return bounds_.at(v); }

  std::vector<Rational> apply(std::span<const Rational> y) const;
  std::vector<Entry> entries() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::pair<Rational, Rational>> columns_;
  std::vector<Rational> bounds_;
};

/// Edge weights in [0, 1].
class FractionalEdgeVector {
 public:
  FractionalEdgeVector() = default;
  explicit FractionalEdgeVector(std::vector<Rational> values);
  static FractionalEdgeVector constant(int m, const Rational& value);

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](EdgeId e) const { return values_.at(e); }
  std::span<const Rational> values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

struct RoundingStats {
  int cycle_steps = 0;
  int leaf_steps = 0;
};

/// Rounds `y` to a 0/1 vector y' with (M y')_v >= (M y)_v - b_v at every
/// vertex, strictly whenever b_v > 0. Integral coordinates of `y` are kept.
///
/// Cycles of the fractional support are removed first by moving along a
/// direction alpha with M alpha >= 0 until some coordinate reaches 0 or 1.
/// The remaining forest is peeled from its leaves, rounding each pendant
/// edge so that the coordinate at its inner endpoint does not decrease.
std::vector<bool> round(const EdgeVertexMatrix& m, const FractionalEdgeVector& y,
                        RoundingStats* stats = nullptr);

/// Nontrivial alpha with block * alpha >= 0 for the square submatrix of a
/// cycle. Rows are the cycle's vertices in cycle order and column j is the
/// edge joining rows j and j+1 (mod k). When the block is nonsingular the
/// result solves block * alpha = e_{pivot_row}.
std::vector<Rational> cycle_relief_vector(const RationalMatrix& block, int pivot_row = 0);

}  // namespace orient

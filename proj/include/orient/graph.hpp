#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orient {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Simple undirected graph with stable vertex and edge indices.
///
/// Vertices are 0..n-1 and edges keep the index at which they were given.
/// Self-loops and duplicate edges are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }

  int degree(Vertex v) const { return static_cast<int>(incident_.at(v).size()); }
  std::span<const EdgeId> incident(Vertex v) const { return incident_.at(v); }
  int max_degree() const;

  /// Endpoint of `e` opposite to `v`.
  Vertex other(EdgeId e, Vertex v) const;
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Explicit linear order v_1, ..., v_n of the vertex set.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  /// `sequence[i]` is the vertex in position i. Must be a permutation.
  explicit VertexOrdering(std::vector<Vertex> sequence);

  static VertexOrdering identity(int n);

  int size() const { return static_cast<int>(sequence_.size()); }
  Vertex at(int pos) const { return sequence_.at(pos); }
  int position(Vertex v) const { return position_.at(v); }
  std::span<const Vertex> sequence() const { return sequence_; }

  bool before(Vertex a, Vertex b) const { return position(a) < position(b); }
  VertexOrdering reversed() const;
  /// Same relative order with `v` moved to position 0.
  VertexOrdering moved_to_front(Vertex v) const;

  friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  std::vector<Vertex> sequence_;
  std::vector<int> position_;
};

/// A direction for every edge of an edge list.
///
/// Arcs are aligned with the edges they orient. Parallel arcs are allowed
/// here so the same type can orient an edge multiset.
class Orientation {
 public:
  Orientation() = default;
  /// `reversed[e] == false` orients edge {u, v} as u -> v.
  Orientation(const Graph& g, const std::vector<bool>& reversed);
  Orientation(int num_vertices, std::vector<Arc> arcs);

  /// Arcs must orient exactly the edges of `g`, in edge order.
  static Orientation from_arcs(const Graph& g, std::vector<Arc> arcs);

  int num_vertices() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int i) const { return arcs_.at(i); }
  std::span<const Arc> arcs() const { return arcs_; }

  int out_degree(Vertex v) const { return out_.at(v); }
  int in_degree(Vertex v) const { return in_.at(v); }
  std::span<const int> out_degrees() const { return out_; }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> out_;
  std::vector<int> in_;
};

enum class ForbiddenMode { OutDegree, Imbalance };

/// Finite forbidden values per vertex.
///
/// Values that no orientation can produce (out of range, or of the wrong
/// parity in imbalance mode) are dropped at construction; `dropped()` counts
/// them. Each stored set is sorted and duplicate free, so `size_at(v)` is the
/// effective list size.
class ForbiddenSets {
 public:
  ForbiddenSets() = default;
  ForbiddenSets(const Graph& g, ForbiddenMode mode, std::vector<std::vector<int>> sets);

  static ForbiddenSets none(const Graph& g, ForbiddenMode mode = ForbiddenMode::OutDegree);

  ForbiddenMode mode() const { return mode_; }
  int num_vertices() const { return static_cast<int>(sets_.size()); }
  const std::vector<int>& at(Vertex v) const { return sets_.at(v); }
  int size_at(Vertex v) const { return static_cast<int>(sets_.at(v).size()); }
  bool forbids(Vertex v, int value) const;
  int dropped() const { return dropped_; }

 private:
  ForbiddenMode mode_ = ForbiddenMode::OutDegree;
  std::vector<std::vector<int>> sets_;
  int dropped_ = 0;
};

/// Spanning subgraph given by an inclusion bit per edge of the host graph.
class Subgraph {
 public:
  Subgraph() = default;
  Subgraph(const Graph& g, std::vector<bool> included);

  static Subgraph empty(const Graph& g);
  static Subgraph full(const Graph& g);

  int host_edges() const { return static_cast<int>(included_.size()); }
  bool contains(EdgeId e) const { return included_.at(e); }
  int num_edges() const;
  std::vector<EdgeId> edge_ids() const;
  const std::vector<bool>& bits() const { return included_; }

  friend bool operator==(const Subgraph&, const Subgraph&) = default;

 private:
  std::vector<bool> included_;
};

struct SideDegrees {
  int left = 0;
  int right = 0;

  friend bool operator==(const SideDegrees&, const SideDegrees&) = default;
};

/// Per-vertex counts of scoped edges going to earlier (left) and later
/// (right) vertices. The scope is `sub` when given, else all of `g`.
std::vector<SideDegrees> left_right_degrees(const Graph& g, const VertexOrdering& ord,
                                            const Subgraph* sub = nullptr);

/// deg+(v) - deg-(v).
int imbalance(const Orientation& d, Vertex v);

/// Whether the mode-appropriate statistic of `d` avoids `f` at every vertex.
bool is_f_avoiding(const Orientation& d, const ForbiddenSets& f);

/// Re-expresses out-degree sets as imbalance sets: a -> 2a - deg(v).
ForbiddenSets convert_to_imbalance(const ForbiddenSets& f, const Graph& g);

/// Orientation with |deg+(v) - deg-(v)| <= 1 everywhere.
Orientation balanced_orientation(const Graph& g);

std::string to_string(ForbiddenMode mode);

}  // namespace orient

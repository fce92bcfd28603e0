#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "skewspec/error.hpp"

namespace skewspec {

/// Unordered pair {u, v}, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with a canonical
/// (lexicographically sorted) edge list.
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalizes. Pairs may be given in either order.
  /// Throws Error{SelfLoop | VertexOutOfRange | DuplicateEdge}.
  Graph(int n, std::span<const std::pair<int, int>> pairs);
  Graph(int n, std::initializer_list<std::pair<int, int>> pairs);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Sorted neighbor list of v.
  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;

  /// Index of edge {u, v} in edges(), or -1.
  int edge_index(int u, int v) const;

  /// Common degree if every vertex has it, otherwise -1. Empty graph: -1.
  int regular_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void finish();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};  // CSR over neighbors_
  std::vector<int> neighbors_;
};

Graph build_graph(int n, std::span<const std::pair<int, int>> pairs);

/// A direction bit per edge of an underlying Graph: bit 0 orients the stored
/// pair (u, v) as u -> v, bit 1 as v -> u.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  OrientedGraph(Graph g, std::vector<std::uint8_t> direction);

  /// Orientation with all bits zero (every arc from lower to higher index).
  static OrientedGraph ascending(Graph g);

  /// Builds from arcs (tail, head); the underlying graph is derived.
  static OrientedGraph from_arcs(int n, std::span<const std::pair<int, int>> arcs);
  static OrientedGraph from_arcs(int n, std::initializer_list<std::pair<int, int>> arcs);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<std::uint8_t>& direction() const noexcept { return direction_; }
  int order() const noexcept { return graph_.order(); }
  int size() const noexcept { return graph_.size(); }

  /// Arc of edge i as (tail, head).
  std::pair<int, int> arc(int i) const;
  std::vector<std::pair<int, int>> arcs() const;

  /// True if tail -> head is an arc.
  bool has_arc(int tail, int head) const;

  /// Skew-adjacency entry s(i, j) in {-1, 0, 1}.
  int skew_entry(int i, int j) const;

  OrientedGraph reversed() const;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  Graph graph_;
  std::vector<std::uint8_t> direction_;
};

enum class Side : std::uint8_t { X = 0, Y = 1 };

/// Two-coloring with every edge joining X to Y. Canonical form: the
/// minimum-index vertex of each connected component is on side X.
class Bipartition {
 public:
  Bipartition() = default;
  explicit Bipartition(std::vector<Side> side) : side_(std::move(side)) {}

  Side side(int v) const { return side_.at(static_cast<std::size_t>(v)); }
  const std::vector<Side>& sides() const noexcept { return side_; }
  int count(Side s) const;

  /// True if labels have the right length and no edge is monochromatic.
  bool valid_for(const Graph& g) const;

  /// X vertices in increasing order followed by Y vertices in increasing
  /// order.
  std::vector<int> x_first_order() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<Side> side_;
};

/// Dense square matrix of exact integers, row-major.
class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  explicit IntMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, 0) {}
  IntMatrix(int dim, std::initializer_list<value_type> row_major);

  static IntMatrix identity(int dim, value_type scale = 1);

  int dim() const noexcept { return dim_; }
  value_type& operator()(int i, int j) { return data_[index(i, j)]; }
  value_type operator()(int i, int j) const { return data_[index(i, j)]; }
  std::span<const value_type> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
  }
  std::span<value_type> row(int i) {
    return {data_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
  }
  const std::vector<value_type>& data() const noexcept { return data_; }

  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  IntMatrix transposed() const;
  IntMatrix operator-() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
  }

  int dim_ = 0;
  std::vector<value_type> data_;
};

/// Kronecker product a (x) b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Symmetric permutation: result(i, j) = m(order[i], order[j]).
IntMatrix permuted(const IntMatrix& m, std::span<const int> order);

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix skew_adjacency(const OrientedGraph& og);

/// Canonical BFS two-coloring per component. Throws NotBipartiteError
/// carrying an odd cycle.
Bipartition bipartition(const Graph& g);

/// Every arc directed from X to Y. Throws Error{InvalidBipartition}.
OrientedGraph elementary_orientation(const Graph& g, const Bipartition& b);

/// Component label per vertex; labels are numbered in order of each
/// component's minimum vertex.
std::vector<int> connected_components(const Graph& g);

/// Disjoint union with b's vertices shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
OrientedGraph disjoint_union(const OrientedGraph& a, const OrientedGraph& b);

/// Small named graphs used across tests, generators and the CLI.
namespace named {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);  // parts {0..a-1}, {a..a+b-1}
Graph star(int leaves);                  // centre 0
Graph hypercube(int d);
Graph wheel(int rim);                    // hub 0, rim 1..rim
Graph empty(int n);
}  // namespace named

}  // namespace skewspec

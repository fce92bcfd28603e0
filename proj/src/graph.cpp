#include "skewspec/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace skewspec {

// ---------------------------------------------------------------- Graph

Graph::Graph(int n, std::span<const std::pair<int, int>> pairs) : n_(n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative vertex count");
  edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(Errc::VertexOutOfRange, "edge {" + std::to_string(a) + "," + std::to_string(b) +
                                              "} has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(a));
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(Errc::DuplicateEdge,
                "duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  finish();
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> pairs)
    : Graph(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size())) {}

void Graph::finish() {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  neighbors_.assign(static_cast<std::size_t>(offsets_[n_]), 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    neighbors_[fill[e.u]++] = e.v;
    neighbors_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(neighbors_.begin() + offsets_[v], neighbors_.begin() + offsets_[v + 1]);
  }
}

std::span<const int> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  return {neighbors_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

bool Graph::adjacent(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Graph::regular_degree() const {
  if (n_ == 0) return -1;
  int k = degree(0);
  for (int v = 1; v < n_; ++v) {
    if (degree(v) != k) return -1;
  }
  return k;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> pairs) { return Graph(n, pairs); }

// ---------------------------------------------------------------- OrientedGraph

OrientedGraph::OrientedGraph(Graph g, std::vector<std::uint8_t> direction)
    : graph_(std::move(g)), direction_(std::move(direction)) {
  if (direction_.size() != static_cast<std::size_t>(graph_.size())) {
    throw Error(Errc::LengthMismatch, "direction vector has " + std::to_string(direction_.size()) +
                                          " bits for " + std::to_string(graph_.size()) + " edges");
  }
  for (auto& b : direction_) b = b ? 1 : 0;
}

OrientedGraph OrientedGraph::ascending(Graph g) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()), 0);
  return OrientedGraph(std::move(g), std::move(bits));
}

OrientedGraph OrientedGraph::from_arcs(int n, std::span<const std::pair<int, int>> arcs) {
  Graph g(n, arcs);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()), 0);
  for (auto [tail, head] : arcs) bits[static_cast<std::size_t>(g.edge_index(tail, head))] = tail > head;
  return OrientedGraph(std::move(g), std::move(bits));
}

OrientedGraph OrientedGraph::from_arcs(int n, std::initializer_list<std::pair<int, int>> arcs) {
  return from_arcs(n, std::span<const std::pair<int, int>>(arcs.begin(), arcs.size()));
}

std::pair<int, int> OrientedGraph::arc(int i) const {
  const Edge& e = graph_.edges().at(static_cast<std::size_t>(i));
  return direction_[i] ? std::pair{e.v, e.u} : std::pair{e.u, e.v};
}

std::vector<std::pair<int, int>> OrientedGraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(direction_.size());
  for (int i = 0; i < size(); ++i) out.push_back(arc(i));
  return out;
}

bool OrientedGraph::has_arc(int tail, int head) const {
  int i = graph_.edge_index(tail, head);
  return i >= 0 && arc(i).first == tail;
}

int OrientedGraph::skew_entry(int i, int j) const {
  int e = graph_.edge_index(i, j);
  if (e < 0) return 0;
  return arc(e).first == i ? 1 : -1;
}

OrientedGraph OrientedGraph::reversed() const {
  std::vector<std::uint8_t> bits = direction_;
  for (auto& b : bits) b ^= 1;
  return OrientedGraph(graph_, std::move(bits));
}

// ---------------------------------------------------------------- Bipartition

int Bipartition::count(Side s) const {
  return static_cast<int>(std::count(side_.begin(), side_.end(), s));
}

bool Bipartition::valid_for(const Graph& g) const {
  if (side_.size() != static_cast<std::size_t>(g.order())) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return side_[e.u] != side_[e.v]; });
}

std::vector<int> Bipartition::x_first_order() const {
  std::vector<int> order;
  order.reserve(side_.size());
  for (Side want : {Side::X, Side::Y}) {
    for (std::size_t v = 0; v < side_.size(); ++v) {
      if (side_[v] == want) order.push_back(static_cast<int>(v));
    }
  }
  return order;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(int dim, std::initializer_list<value_type> row_major) : IntMatrix(dim) {
  if (row_major.size() != data_.size()) throw Error(Errc::LengthMismatch, "initializer size");
  std::copy(row_major.begin(), row_major.end(), data_.begin());
}

IntMatrix IntMatrix::identity(int dim, value_type scale) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = scale;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool IntMatrix::is_skew_symmetric() const {
  for (int i = 0; i < dim_; ++i) {
    if ((*this)(i, i) != 0) return false;
    for (int j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw Error(Errc::LengthMismatch, "matrix dimensions differ");
  IntMatrix r(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      value_type a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < dim_; ++j) r(i, j) += a * rhs(k, j);
    }
  }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw Error(Errc::LengthMismatch, "matrix dimensions differ");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += rhs.data_[i];
  return r;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  const int m = a.dim();
  const int n = b.dim();
  IntMatrix r(m * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      IntMatrix::value_type s = a(i, j);
      if (s == 0) continue;
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) r(i * n + p, j * n + q) = s * b(p, q);
      }
    }
  }
  return r;
}

IntMatrix permuted(const IntMatrix& m, std::span<const int> order) {
  if (order.size() != static_cast<std::size_t>(m.dim())) {
    throw Error(Errc::LengthMismatch, "permutation length differs from matrix dimension");
  }
  IntMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) r(i, j) = m(order[i], order[j]);
  }
  return r;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order());
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1;
    a(e.v, e.u) = 1;
  }
  return a;
}

IntMatrix skew_adjacency(const OrientedGraph& og) {
  IntMatrix s(og.order());
  for (int i = 0; i < og.size(); ++i) {
    auto [tail, head] = og.arc(i);
    s(tail, head) = 1;
    s(head, tail) = -1;
  }
  return s;
}

// ---------------------------------------------------------------- traversal

namespace {

// Vertices of the tree path from v up to (and including) the root.
std::vector<int> path_to_root(int v, const std::vector<int>& parent) {
  std::vector<int> path{v};
  while (parent[v] != -1) {
    v = parent[v];
    path.push_back(v);
  }
  return path;
}

}  // namespace

Bipartition bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = color[u] ^ 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Same-colored endpoints: the two root paths meet at their lowest
          // common ancestor and close an odd cycle through {u, w}.
          auto pu = path_to_root(u, parent);
          auto pw = path_to_root(w, parent);
          while (pu.size() > 1 && pw.size() > 1 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
            pu.pop_back();
            pw.pop_back();
          }
          // pu and pw now end at the common ancestor.
          std::vector<int> cycle(pu.begin(), pu.end());
          for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) cycle.push_back(*it);
          throw NotBipartiteError(std::move(cycle));
        }
      }
    }
  }
  std::vector<Side> side(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) side[v] = color[v] == 0 ? Side::X : Side::Y;
  return Bipartition(std::move(side));
}

OrientedGraph elementary_orientation(const Graph& g, const Bipartition& b) {
  if (!b.valid_for(g)) throw Error(Errc::InvalidBipartition, "labels do not two-color the graph");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) bits[i] = b.side(g.edges()[i].u) == Side::Y;
  return OrientedGraph(g, std::move(bits));
}

std::vector<int> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  int next = 0;
  for (int root = 0; root < n; ++root) {
    if (label[root] != -1) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : a.edges()) pairs.emplace_back(e.u, e.v);
  for (const Edge& e : b.edges()) pairs.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), pairs);
}

OrientedGraph disjoint_union(const OrientedGraph& a, const OrientedGraph& b) {
  std::vector<std::pair<int, int>> arcs = a.arcs();
  for (auto [t, h] : b.arcs()) arcs.emplace_back(t + a.order(), h + a.order());
  OrientedGraph og = OrientedGraph::from_arcs(a.order() + b.order(), arcs);
  return og;
}

// ---------------------------------------------------------------- named graphs

namespace named {

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph(a + b, e);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph hypercube(int d) {
  const int n = 1 << d;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < d; ++bit) {
      int w = v ^ (1 << bit);
      if (v < w) e.emplace_back(v, w);
    }
  }
  return Graph(n, e);
}

Graph wheel(int rim) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= rim; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % rim + 1);
  }
  return Graph(rim + 1, e);
}

Graph empty(int n) { return Graph(n, std::span<const std::pair<int, int>>{}); }

}  // namespace named

}  // namespace skewspec

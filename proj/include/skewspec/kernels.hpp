#pragma once

// Data-parallel kernels. Every kernel exists twice: a plain serial version
// kept as the reference implementation for tests and benchmarks, and an
// OpenMP version used by the library. Both must produce identical results.

#include <cstdint>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "skewspec/graph.hpp"

namespace skewspec::kernels {

/// Outcome of the maximum-energy orientation search.
struct SearchResult {
  std::optional<std::vector<std::uint8_t>> direction;  // lexicographically first success
  std::uint64_t states = 0;  // partial assignments examined, in serial DFS order
  bool budget_hit = false;
};

/// Precomputed constraint tables for the backtracking search. Immutable after
/// construction so workers can share one instance.
class OrientationSearch {
 public:
  /// g must be regular; the diagonal of S S^T equals the degree for free.
  explicit OrientationSearch(const Graph& g);

  int edge_count() const noexcept { return edge_count_; }

  struct Subtree {
    std::optional<std::vector<std::uint8_t>> direction;
    std::uint64_t states = 0;
    bool aborted = false;
  };

  /// DFS over edges [prefix.size(), m) below a fixed, already-feasible prefix.
  /// Stops at the first complete assignment or once `budget` states were
  /// spent. The first edge is pinned to 0 when the prefix is empty.
  Subtree explore(const std::vector<std::uint8_t>& prefix, std::uint64_t budget) const;

  struct Frontier {
    std::vector<std::uint8_t> prefix;
    std::uint64_t states_before = 0;  // serial-order states spent before this subtree
  };

  /// Enumerates feasible prefixes of length `depth` in DFS preorder. `total`
  /// receives the number of states spent on the prefix tree itself.
  std::vector<Frontier> frontier(int depth, std::uint64_t& total) const;

 private:
  struct Term {
    int constraint;
    int other_edge;
    int sign;  // product of the two base signs
  };

  struct State;
  bool assign(State& st, int edge, std::uint8_t bit) const;
  void unassign(State& st, int edge) const;

  int edge_count_ = 0;
  std::vector<std::vector<Term>> terms_at_;  // terms completed when edge d is assigned
  std::vector<int> term_count_;              // per constraint
};

namespace detail {
// vector<bool> packs bits and cannot take concurrent writes.
template <class R>
using slot_t = std::conditional_t<std::is_same_v<R, bool>, std::uint8_t, R>;
}  // namespace detail

namespace serial {

/// Dense S * S^T from the explicit skew-adjacency matrix.
IntMatrix gram(const IntMatrix& s);

/// Exact test S * S^T == k I via the dense product.
bool is_scalar_gram(const OrientedGraph& og, int k);

SearchResult search_max_orientation(const Graph& g, std::uint64_t budget);

/// f(og) for every one of the 2^m orientations; index bit i is edge i's
/// direction bit. Boolean results come back as uint8_t. f must not throw in
/// the parallel version.
template <class F>
auto map_orientations(const Graph& g, F&& f) {
  using R = detail::slot_t<decltype(f(std::declval<const OrientedGraph&>()))>;
  const int m = g.size();
  if (m > 24) throw Error(Errc::InvalidArgument, "orientation sweep limited to 24 edges");
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<R> out(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) bits[i] = (mask >> i) & 1U;
    out[mask] = f(OrientedGraph(g, std::move(bits)));
  }
  return out;
}

}  // namespace serial

namespace omp {

/// Sparse S * S^T, rows computed in parallel.
IntMatrix gram(const OrientedGraph& og);

/// Exact test S * S^T == k I without materializing the product.
bool is_scalar_gram(const OrientedGraph& og, int k);

/// Parallel over prefix subtrees; returns exactly what the serial search
/// returns, including the state count.
SearchResult search_max_orientation(const Graph& g, std::uint64_t budget);

template <class F>
auto map_orientations(const Graph& g, F&& f) {
  using R = detail::slot_t<decltype(f(std::declval<const OrientedGraph&>()))>;
  const int m = g.size();
  if (m > 24) throw Error(Errc::InvalidArgument, "orientation sweep limited to 24 edges");
  const std::int64_t count = std::int64_t{1} << m;
  std::vector<R> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t mask = 0; mask < count; ++mask) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) bits[i] = (mask >> i) & 1;
    out[static_cast<std::size_t>(mask)] = f(OrientedGraph(g, std::move(bits)));
  }
  return out;
}

}  // namespace omp

}  // namespace skewspec::kernels

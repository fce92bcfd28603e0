#pragma once

// Test-only oracles and generators. Everything here is deliberately brute
// force and independent of the library's algorithms: it only uses the graph
// containers and Eigen.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "skewspec/graph.hpp"
#include "skewspec/spectra.hpp"

namespace skewspec::testing {

/// Imaginary parts of the eigenvalues of S computed by Eigen's general
/// (non-symmetric) eigensolver on S itself, sorted descending.
inline std::vector<double> skew_spectrum_oracle(const OrientedGraph& og) {
  const int n = og.order();
  if (n == 0) return {};
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (auto [t, h] : og.arcs()) {
    s(t, h) = 1.0;
    s(h, t) = -1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(s, false);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()[i].imag());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Every cycle of g as a vertex walk, found by testing all edge subsets for
/// "connected and 2-regular on its support". Requires m <= 16.
inline std::vector<std::vector<int>> all_cycles_bruteforce(const Graph& g) {
  const int m = g.size();
  std::vector<std::vector<int>> cycles;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) {
        adj[g.edges()[i].u].push_back(g.edges()[i].v);
        adj[g.edges()[i].v].push_back(g.edges()[i].u);
      }
    }
    int start = -1;
    bool ok = true;
    int support = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (adj[v].empty()) continue;
      if (adj[v].size() != 2) ok = false;
      if (start < 0) start = v;
      ++support;
    }
    if (!ok) continue;
    std::vector<int> walk{start};
    int prev = -1;
    int cur = start;
    while (true) {
      const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
      if (next == start) break;
      walk.push_back(next);
      prev = cur;
      cur = next;
    }
    if (static_cast<int>(walk.size()) == support) cycles.push_back(walk);
  }
  return cycles;
}

/// Vertex sets (sorted) that induce a cycle, by checking every subset of
/// size >= 3. Requires n <= 16.
inline std::set<std::vector<int>> induced_cycle_sets_bruteforce(const Graph& g) {
  const int n = g.order();
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) vs.push_back(v);
    }
    if (vs.size() < 3) continue;
    bool two_regular = true;
    for (int v : vs) {
      int d = 0;
      for (int w : vs) d += g.adjacent(v, w) ? 1 : 0;
      if (d != 2) two_regular = false;
    }
    if (!two_regular) continue;
    // connected?
    std::vector<int> stack{vs[0]};
    std::set<int> seen{vs[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : vs) {
        if (g.adjacent(v, w) && seen.insert(w).second) stack.push_back(w);
      }
    }
    if (seen.size() == vs.size()) out.insert(vs);
  }
  return out;
}

/// Tries all 2^n vertex subsets. Requires n <= 20.
inline bool switching_equivalent_bruteforce(const OrientedGraph& a, const OrientedGraph& b) {
  const int n = a.order();
  const auto& edges = a.graph().edges();
  for (std::uint32_t w = 0; w < (1U << n); ++w) {
    bool all = true;
    for (std::size_t i = 0; i < edges.size() && all; ++i) {
      const std::uint8_t flip = ((w >> edges[i].u) ^ (w >> edges[i].v)) & 1U;
      if ((a.direction()[i] ^ flip) != b.direction()[i]) all = false;
    }
    if (all) return true;
  }
  return false;
}

inline OrientedGraph orientation_from_mask(const Graph& g, std::uint64_t mask) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) bits[i] = (mask >> i) & 1U;
  return OrientedGraph(g, std::move(bits));
}

inline OrientedGraph random_orientation(const Graph& g, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()));
  for (auto& b : bits) b = coin(rng);
  return OrientedGraph(g, std::move(bits));
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) pairs.emplace_back(i, j);
    }
  }
  return Graph(n, pairs);
}

inline std::vector<int> random_subset(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> w;
  for (int v = 0; v < n; ++v) {
    if (coin(rng)) w.push_back(v);
  }
  return w;
}

/// All non-isomorphic trees on 1..6 vertices (the last six are the six
/// trees of order 6).
inline std::vector<Graph> trees_up_to_six() {
  const std::vector<std::pair<int, std::vector<std::pair<int, int>>>> shapes = {
      {1, {}},
      {2, {{0, 1}}},
      {3, {{0, 1}, {1, 2}}},
      {4, {{0, 1}, {1, 2}, {2, 3}}},                  // P4
      {4, {{0, 1}, {0, 2}, {0, 3}}},                  // K1,3
      {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},          // P5
      {5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}}},          // spider
      {5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}},          // K1,4
      {6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}},  // P6
      {6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}}},
      {6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}},
      {6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}}},
      {6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}}},
      {6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}},  // K1,5
  };
  std::vector<Graph> out;
  for (const auto& [n, edges] : shapes) out.emplace_back(n, edges);
  return out;
}

}  // namespace skewspec::testing

#include "skewspec/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>

namespace skewspec::kernels {

namespace {

// Per-vertex neighbor list paired with the skew entry s(v, neighbor).
struct SignedAdjacency {
  std::vector<int> offsets;
  std::vector<int> target;
  std::vector<int> sign;

  explicit SignedAdjacency(const OrientedGraph& og) {
    const Graph& g = og.graph();
    const int n = g.order();
    offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + g.degree(v);
    target.resize(static_cast<std::size_t>(offsets[n]));
    sign.resize(target.size());
    std::vector<int> fill(offsets.begin(), offsets.end() - 1);
    for (int e = 0; e < og.size(); ++e) {
      auto [tail, head] = og.arc(e);
      target[fill[tail]] = head;
      sign[fill[tail]++] = 1;
      target[fill[head]] = tail;
      sign[fill[head]++] = -1;
    }
  }
};

// Accumulates row i of S S^T into `row`, recording touched columns.
void gram_row(const SignedAdjacency& adj, int i, std::vector<std::int64_t>& row,
              std::vector<int>& touched) {
  for (int p = adj.offsets[i]; p < adj.offsets[i + 1]; ++p) {
    const int k = adj.target[p];
    const int s_ik = adj.sign[p];
    for (int q = adj.offsets[k]; q < adj.offsets[k + 1]; ++q) {
      const int j = adj.target[q];
      // s(j, k) = -s(k, j)
      const int s_jk = -adj.sign[q];
      if (row[j] == 0) touched.push_back(j);
      row[j] += s_ik * s_jk;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- search tables

struct OrientationSearch::State {
  std::vector<std::uint8_t> bits;
  std::vector<int> partial;
  std::vector<int> remaining;
  std::uint64_t states = 0;
  std::uint64_t budget = 0;
  bool aborted = false;
};

OrientationSearch::OrientationSearch(const Graph& g) : edge_count_(g.size()) {
  terms_at_.resize(static_cast<std::size_t>(edge_count_));
  std::map<std::pair<int, int>, int> constraint_id;
  const auto base_sign = [](int from, int to) { return from < to ? 1 : -1; };
  for (int k = 0; k < g.order(); ++k) {
    auto nb = g.neighbors(k);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        const int i = nb[a];
        const int j = nb[b];
        auto [it, inserted] = constraint_id.try_emplace({i, j}, static_cast<int>(term_count_.size()));
        if (inserted) term_count_.push_back(0);
        const int c = it->second;
        ++term_count_[c];
        const int e1 = g.edge_index(i, k);
        const int e2 = g.edge_index(j, k);
        const int sign = base_sign(i, k) * base_sign(j, k);
        terms_at_[std::max(e1, e2)].push_back(Term{c, std::min(e1, e2), sign});
      }
    }
  }
}

bool OrientationSearch::assign(State& st, int edge, std::uint8_t bit) const {
  st.bits[edge] = bit;
  bool ok = true;
  for (const Term& t : terms_at_[edge]) {
    const int value = (bit ^ st.bits[t.other_edge]) ? -t.sign : t.sign;
    st.partial[t.constraint] += value;
    --st.remaining[t.constraint];
    if (std::abs(st.partial[t.constraint]) > st.remaining[t.constraint]) ok = false;
  }
  return ok;
}

void OrientationSearch::unassign(State& st, int edge) const {
  const std::uint8_t bit = st.bits[edge];
  for (const Term& t : terms_at_[edge]) {
    const int value = (bit ^ st.bits[t.other_edge]) ? -t.sign : t.sign;
    st.partial[t.constraint] -= value;
    ++st.remaining[t.constraint];
  }
}

OrientationSearch::Subtree OrientationSearch::explore(const std::vector<std::uint8_t>& prefix,
                                                      std::uint64_t budget) const {
  State st;
  st.bits.assign(static_cast<std::size_t>(edge_count_), 0);
  st.partial.assign(term_count_.size(), 0);
  st.remaining = term_count_;
  st.budget = budget;
  for (std::size_t d = 0; d < prefix.size(); ++d) assign(st, static_cast<int>(d), prefix[d]);

  Subtree out;
  // Recursive DFS, bit 0 before bit 1.
  auto dfs = [&](auto&& self, int d) -> bool {
    if (d == edge_count_) return true;
    const std::uint8_t last = d == 0 ? 0 : 1;
    for (std::uint8_t b = 0; b <= last; ++b) {
      if (st.states >= st.budget) {
        st.aborted = true;
        return false;
      }
      ++st.states;
      if (assign(st, d, b) && self(self, d + 1)) return true;
      unassign(st, d);
      if (st.aborted) return false;
    }
    return false;
  };
  if (dfs(dfs, static_cast<int>(prefix.size()))) out.direction = st.bits;
  out.states = st.states;
  out.aborted = st.aborted;
  return out;
}

std::vector<OrientationSearch::Frontier> OrientationSearch::frontier(int depth,
                                                                     std::uint64_t& total) const {
  State st;
  st.bits.assign(static_cast<std::size_t>(edge_count_), 0);
  st.partial.assign(term_count_.size(), 0);
  st.remaining = term_count_;
  std::vector<Frontier> out;
  auto dfs = [&](auto&& self, int d) -> void {
    if (d == depth) {
      out.push_back(Frontier{std::vector<std::uint8_t>(st.bits.begin(), st.bits.begin() + d), st.states});
      return;
    }
    const std::uint8_t last = d == 0 ? 0 : 1;
    for (std::uint8_t b = 0; b <= last; ++b) {
      ++st.states;
      if (assign(st, d, b)) self(self, d + 1);
      unassign(st, d);
    }
  };
  dfs(dfs, 0);
  total = st.states;
  return out;
}

// ---------------------------------------------------------------- serial

namespace serial {

IntMatrix gram(const IntMatrix& s) {
  const int n = s.dim();
  IntMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < n; ++k) acc += s(i, k) * s(j, k);
      r(i, j) = acc;
    }
  }
  return r;
}

bool is_scalar_gram(const OrientedGraph& og, int k) {
  return gram(skew_adjacency(og)) == IntMatrix::identity(og.order(), k);
}

SearchResult search_max_orientation(const Graph& g, std::uint64_t budget) {
  SearchResult result;
  if (g.size() == 0) {
    result.direction = std::vector<std::uint8_t>{};
    return result;
  }
  OrientationSearch search(g);
  auto sub = search.explore({}, budget);
  result.direction = std::move(sub.direction);
  result.states = sub.states;
  result.budget_hit = sub.aborted;
  return result;
}

}  // namespace serial

// ---------------------------------------------------------------- OpenMP

namespace omp {

IntMatrix gram(const OrientedGraph& og) {
  const SignedAdjacency adj(og);
  const int n = og.order();
  IntMatrix r(n);
#pragma omp parallel
  {
    std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0);
    std::vector<int> touched;
#pragma omp for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) {
      gram_row(adj, i, row, touched);
      auto out = r.row(i);
      // A column can appear twice in `touched` if its sum passed through 0.
      for (int j : touched) out[j] = row[j];
      for (int j : touched) row[j] = 0;
      touched.clear();
    }
  }
  return r;
}

bool is_scalar_gram(const OrientedGraph& og, int k) {
  const SignedAdjacency adj(og);
  const int n = og.order();
  std::atomic<bool> ok{true};
#pragma omp parallel
  {
    std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0);
    std::vector<int> touched;
#pragma omp for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) {
      if (!ok.load(std::memory_order_relaxed)) continue;
      gram_row(adj, i, row, touched);
      bool row_ok = row[i] == k;
      for (int j : touched) {
        if (j != i && row[j] != 0) row_ok = false;
      }
      for (int j : touched) row[j] = 0;
      touched.clear();
      if (!row_ok) ok.store(false, std::memory_order_relaxed);
    }
  }
  return ok.load();
}

SearchResult search_max_orientation(const Graph& g, std::uint64_t budget) {
  constexpr int kFrontierDepth = 10;
  if (g.size() <= kFrontierDepth + 2) return serial::search_max_orientation(g, budget);

  const OrientationSearch search(g);
  std::uint64_t prefix_states = 0;
  const auto frontier = search.frontier(kFrontierDepth, prefix_states);
  const auto count = static_cast<std::int64_t>(frontier.size());
  std::vector<OrientationSearch::Subtree> subs(frontier.size());
  // Lowest frontier index that found a solution; later subtrees can be skipped.
  std::atomic<std::int64_t> best{count};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t f = 0; f < count; ++f) {
    if (f > best.load(std::memory_order_relaxed)) continue;
    subs[f] = search.explore(frontier[f].prefix, budget);
    if (subs[f].direction) {
      std::int64_t cur = best.load();
      while (f < cur && !best.compare_exchange_weak(cur, f)) {
      }
    }
  }

  // Replay the serial visiting order to reproduce its result and state count.
  SearchResult result;
  std::uint64_t subtree_states = 0;
  for (std::int64_t f = 0; f < count; ++f) {
    const std::uint64_t base = frontier[f].states_before + subtree_states;
    const auto& sub = subs[f];
    if (base > budget || sub.aborted || base + sub.states > budget) {
      result.states = budget;
      result.budget_hit = true;
      return result;
    }
    if (sub.direction) {
      result.direction = sub.direction;
      result.states = base + sub.states;
      return result;
    }
    subtree_states += sub.states;
  }
  const std::uint64_t total = prefix_states + subtree_states;
  result.states = std::min(total, budget);
  result.budget_hit = total > budget;
  return result;
}

}  // namespace omp

}  // namespace skewspec::kernels

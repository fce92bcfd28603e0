#include "skewspec/orientation.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace skewspec {

OrientedGraph switch_orientation(const OrientedGraph& og, const std::vector<int>& w) {
  std::vector<std::uint8_t> in_w(static_cast<std::size_t>(og.order()), 0);
  for (int v : w) {
    if (v < 0 || v >= og.order()) {
      throw Error(Errc::VertexOutOfRange, "switching set contains vertex " + std::to_string(v));
    }
    in_w[v] = 1;
  }
  std::vector<std::uint8_t> bits = og.direction();
  const auto& edges = og.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) bits[i] ^= in_w[edges[i].u] ^ in_w[edges[i].v];
  return OrientedGraph(og.graph(), std::move(bits));
}

EquivalenceResult switching_equivalent(const OrientedGraph& a, const OrientedGraph& b) {
  if (a.graph() != b.graph()) {
    throw Error(Errc::UnderlyingGraphMismatch, "orientations are over different graphs");
  }
  const Graph& g = a.graph();
  const int n = g.order();
  // s(u) xor s(w) must equal the disagreement bit of every edge {u, w}.
  std::vector<int> s(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::deque<int> queue;
  auto differs = [&](int u, int w) {
    const int e = g.edge_index(u, w);
    return static_cast<int>(a.direction()[e] ^ b.direction()[e]);
  };

  for (int root = 0; root < n; ++root) {
    if (s[root] != -1) continue;
    s[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        const int want = s[u] ^ differs(u, w);
        if (s[w] == -1) {
          s[w] = want;
          parent[w] = u;
          queue.push_back(w);
        } else if (s[w] != want) {
          // Tree paths to the common ancestor plus {u, w} close a cycle
          // with an odd number of disagreeing edges.
          std::vector<int> pu{u}, pw{w};
          while (parent[pu.back()] != -1) pu.push_back(parent[pu.back()]);
          while (parent[pw.back()] != -1) pw.push_back(parent[pw.back()]);
          while (pu.size() > 1 && pw.size() > 1 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
            pu.pop_back();
            pw.pop_back();
          }
          CycleWalk cycle{pu};
          for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) cycle.vertices.push_back(*it);
          EquivalenceResult result;
          result.violating_cycle = std::move(cycle);
          return result;
        }
      }
    }
  }

  SwitchWitness witness;
  for (int v = 0; v < n; ++v) {
    if (s[v] == 1) witness.w.push_back(v);
  }
  EquivalenceResult result;
  result.witness = std::move(witness);
  return result;
}

CycleEnumeration chordless_cycles(const Graph& g, std::size_t cap) {
  const int n = g.order();
  CycleEnumeration out;
  std::vector<int> path;
  std::vector<std::uint8_t> in_path(static_cast<std::size_t>(n), 0);
  // blocked[v]: number of interior path vertices (not the start, not the
  // current end) adjacent to v. Such a v would create a chord.
  std::vector<int> blocked(static_cast<std::size_t>(n), 0);
  bool stop = false;

  auto extend = [&](auto&& self, int start) -> void {
    const int last = path.back();
    for (int v : g.neighbors(last)) {
      if (stop) return;
      if (v <= start || in_path[v] || blocked[v] > 0) continue;
      if (path.size() >= 2 && g.adjacent(v, start)) {
        // v closes the cycle; it cannot be extended past without a chord.
        if (path[1] < v) {
          if (out.cycles.size() == cap) {
            out.cap_exceeded = true;
            stop = true;
            return;
          }
          CycleWalk c{path};
          c.vertices.push_back(v);
          out.cycles.push_back(std::move(c));
        }
        continue;
      }
      const bool last_becomes_interior = path.size() >= 2;
      if (last_becomes_interior) {
        for (int x : g.neighbors(last)) ++blocked[x];
      }
      path.push_back(v);
      in_path[v] = 1;
      self(self, start);
      in_path[v] = 0;
      path.pop_back();
      if (last_becomes_interior) {
        for (int x : g.neighbors(last)) --blocked[x];
      }
    }
  };

  for (int start = 0; start < n && !stop; ++start) {
    path.assign(1, start);
    in_path[start] = 1;
    extend(extend, start);
    in_path[start] = 0;
  }
  return out;
}

int clockwise_arcs(const OrientedGraph& og, const CycleWalk& c) {
  const auto& vs = c.vertices;
  const std::size_t len = vs.size();
  if (len < 3) throw Error(Errc::NotACycle, "a cycle needs at least 3 vertices");
  std::vector<int> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::NotACycle, "walk repeats a vertex");
  }
  if (sorted.front() < 0 || sorted.back() >= og.order()) {
    throw Error(Errc::VertexOutOfRange, "walk leaves the vertex range");
  }
  int r = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const int u = vs[i];
    const int w = vs[(i + 1) % len];
    const int e = og.graph().edge_index(u, w);
    if (e < 0) {
      throw Error(Errc::NotACycle,
                  "walk uses non-edge {" + std::to_string(u) + "," + std::to_string(w) + "}");
    }
    if (og.arc(e).first == u) ++r;
  }
  return r;
}

bool is_uniformly_oriented(const OrientedGraph& og, const CycleWalk& c) {
  const int r = clockwise_arcs(og, c);
  if (c.length() % 2 != 0) throw Error(Errc::OddCycle, "uniformity is defined for even cycles only");
  const auto half = static_cast<int>(c.length() / 2);
  return r % 2 == half % 2;
}

bool all_chordless_uniform(const OrientedGraph& og, std::size_t cap) {
  (void)bipartition(og.graph());
  const auto cycles = chordless_cycles(og.graph(), cap);
  if (cycles.cap_exceeded) {
    throw Error(Errc::CapExceeded, "more than " + std::to_string(cap) + " chordless cycles");
  }
  return std::all_of(cycles.cycles.begin(), cycles.cycles.end(),
                     [&](const CycleWalk& c) { return is_uniformly_oriented(og, c); });
}

bool spectral_predicate(const OrientedGraph& og, double tol) {
  (void)bipartition(og.graph());
  return spectra_equal(skew_spectrum(og), adjacency_spectrum(og.graph()), tol);
}

EquivalenceResult equivalent_to_elementary(const OrientedGraph& og) {
  const Graph& g = og.graph();
  return switching_equivalent(og, elementary_orientation(g, bipartition(g)));
}

}  // namespace skewspec

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skewspec/graph.hpp"
#include "skewspec/spectra.hpp"

namespace skewspec {

/// Vertex set W, sorted ascending. Switching with respect to W reverses
/// every arc with exactly one endpoint in W.
struct SwitchWitness {
  std::vector<int> w;

  friend bool operator==(const SwitchWitness&, const SwitchWitness&) = default;
};

/// Closed walk v0 v1 ... v_{L-1} v0 through distinct vertices. The stored
/// order is the traversal ("clockwise") direction.
struct CycleWalk {
  std::vector<int> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const CycleWalk&, const CycleWalk&) = default;
};

/// Throws Error{VertexOutOfRange}. Duplicates in w are ignored.
OrientedGraph switch_orientation(const OrientedGraph& og, const std::vector<int>& w);

struct EquivalenceResult {
  std::optional<SwitchWitness> witness;
  /// When not equivalent: a cycle whose edges disagree an odd number of times.
  std::optional<CycleWalk> violating_cycle;

  bool equivalent() const noexcept { return witness.has_value(); }
};

/// Decides whether b = switch(a, W) for some W by checking that the set of
/// disagreeing edges is an edge cut. The witness never contains the minimum
/// vertex of any component. Throws Error{UnderlyingGraphMismatch}.
EquivalenceResult switching_equivalent(const OrientedGraph& a, const OrientedGraph& b);

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

struct CycleEnumeration {
  std::vector<CycleWalk> cycles;
  bool cap_exceeded = false;
};

/// Chordless (induced) cycles, triangles included. Each cycle appears once,
/// starting at its minimum vertex and continuing to its smaller neighbor on
/// the cycle. Stops after `cap` cycles with cap_exceeded set.
CycleEnumeration chordless_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);

/// Number of arcs agreeing with the walk's traversal direction.
int clockwise_arcs(const OrientedGraph& og, const CycleWalk& c);

/// For a cycle of length 2l with r clockwise arcs: r = l (mod 2).
/// Throws Error{OddCycle | NotACycle}.
bool is_uniformly_oriented(const OrientedGraph& og, const CycleWalk& c);

/// Throws NotBipartiteError, or Error{CapExceeded} when the cycle
/// enumeration was truncated.
bool all_chordless_uniform(const OrientedGraph& og, std::size_t cap = kDefaultCycleCap);

/// Sp_S(og) == i Sp(G) within tol. Throws NotBipartiteError.
bool spectral_predicate(const OrientedGraph& og, double tol = kDefaultTolerance);

/// switching_equivalent(og, elementary orientation). Throws NotBipartiteError.
EquivalenceResult equivalent_to_elementary(const OrientedGraph& og);

}  // namespace skewspec

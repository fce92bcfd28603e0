#include <gtest/gtest.h>

#include <random>
#include <set>

#include "skewspec/orientation.hpp"
#include "support.hpp"

namespace skewspec {
namespace {

using testing::orientation_from_mask;
using testing::random_graph;
using testing::random_orientation;
using testing::random_subset;

const OrientedGraph kOddC4 = OrientedGraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});

OrientedGraph elementary(const Graph& g) { return elementary_orientation(g, bipartition(g)); }

TEST(Switch, Examples) {
  const Graph c4 = named::cycle(4);
  const OrientedGraph e = elementary(c4);
  // W = {0}: the two arcs at vertex 0 turn around.
  const OrientedGraph s = switch_orientation(e, {0});
  EXPECT_TRUE(s.has_arc(1, 0));
  EXPECT_TRUE(s.has_arc(3, 0));
  EXPECT_TRUE(s.has_arc(2, 1));
  EXPECT_TRUE(s.has_arc(2, 3));

  EXPECT_EQ(switch_orientation(e, {}), e);
  EXPECT_EQ(switch_orientation(e, {0, 1, 2, 3}), e);
  EXPECT_EQ(switch_orientation(e, {0, 0}), s);
  EXPECT_THROW(switch_orientation(e, {4}), Error);
  EXPECT_THROW(switch_orientation(e, {-1}), Error);
}

TEST(Switch, InvolutionAndConjugation) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 10), 0.5, rng);
    const OrientedGraph og = random_orientation(g, rng);
    const auto w = random_subset(g.order(), rng);
    const OrientedGraph sw = switch_orientation(og, w);
    ASSERT_EQ(switch_orientation(sw, w), og);

    // S' = D S D with D = diag(-1 on W, +1 elsewhere).
    std::vector<std::int64_t> d(static_cast<std::size_t>(g.order()), 1);
    for (int v : w) d[v] = -1;
    const IntMatrix s = skew_adjacency(og);
    const IntMatrix s2 = skew_adjacency(sw);
    for (int i = 0; i < g.order(); ++i) {
      for (int j = 0; j < g.order(); ++j) ASSERT_EQ(s2(i, j), d[i] * s(i, j) * d[j]);
    }
  }
}

TEST(SwitchingEquivalent, Examples) {
  const Graph c4 = named::cycle(4);
  const OrientedGraph e = elementary(c4);
  const auto self = switching_equivalent(e, e);
  ASSERT_TRUE(self.equivalent());
  EXPECT_TRUE(self.witness->w.empty());

  // Clockwise-arc parity on a cycle is invariant under switching, so the
  // oddly oriented C4 (r = 3) is not equivalent to the elementary one (r = 2).
  const auto odd = switching_equivalent(kOddC4, e);
  EXPECT_FALSE(odd.equivalent());
  ASSERT_TRUE(odd.violating_cycle.has_value());
  EXPECT_EQ(odd.violating_cycle->length(), 4u);
  EXPECT_FALSE(testing::switching_equivalent_bruteforce(kOddC4, e));

  const auto s = switch_orientation(e, {1, 2});
  const auto res = switching_equivalent(e, s);
  ASSERT_TRUE(res.equivalent());
  EXPECT_EQ(switch_orientation(e, res.witness->w), s);

  EXPECT_THROW(switching_equivalent(e, OrientedGraph::ascending(named::path(4))), Error);
}

TEST(SwitchingEquivalent, AgreesWithBruteForce) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 9), 0.4, rng);
    const OrientedGraph a = random_orientation(g, rng);
    // Half the time b is a genuine switch of a, otherwise random.
    const OrientedGraph b = trial % 2 == 0 ? switch_orientation(a, random_subset(g.order(), rng))
                                           : random_orientation(g, rng);
    const auto res = switching_equivalent(a, b);
    ASSERT_EQ(res.equivalent(), testing::switching_equivalent_bruteforce(a, b));
    if (res.equivalent()) {
      ASSERT_EQ(switch_orientation(a, res.witness->w), b);
      // No component minimum in the witness.
      const auto label = connected_components(g);
      std::set<int> seen;
      for (int v = 0; v < g.order(); ++v) {
        if (!seen.insert(label[v]).second) continue;  // v is its component's minimum
        ASSERT_FALSE(std::binary_search(res.witness->w.begin(), res.witness->w.end(), v));
      }
    } else {
      // The cycle sees an odd number of disagreements.
      const auto& c = res.violating_cycle->vertices;
      int disagree = 0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const int u = c[i];
        const int v = c[(i + 1) % c.size()];
        ASSERT_TRUE(g.adjacent(u, v));
        disagree += a.has_arc(u, v) != b.has_arc(u, v) ? 1 : 0;
      }
      ASSERT_EQ(disagree % 2, 1);
    }
  }
}

TEST(SwitchingEquivalent, EquivalenceRelation) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 7), 0.5, rng);
    const OrientedGraph a = random_orientation(g, rng);
    const OrientedGraph b = random_orientation(g, rng);
    const OrientedGraph c = trial % 3 == 0 ? switch_orientation(b, random_subset(g.order(), rng))
                                           : random_orientation(g, rng);
    EXPECT_TRUE(switching_equivalent(a, a).equivalent());
    const bool ab = switching_equivalent(a, b).equivalent();
    EXPECT_EQ(ab, switching_equivalent(b, a).equivalent());
    const bool bc = switching_equivalent(b, c).equivalent();
    if (ab && bc) EXPECT_TRUE(switching_equivalent(a, c).equivalent());
  }
}

TEST(ChordlessCycles, Examples) {
  const auto c6 = chordless_cycles(named::cycle(6));
  ASSERT_EQ(c6.cycles.size(), 1u);
  EXPECT_EQ(c6.cycles[0].vertices, (std::vector<int>{0, 1, 2, 3, 4, 5}));

  // K4,4: every chordless cycle is a 4-cycle, C(4,2)^2 of them.
  const auto k44 = chordless_cycles(named::complete_bipartite(4, 4));
  EXPECT_EQ(k44.cycles.size(), 36u);
  for (const auto& c : k44.cycles) EXPECT_EQ(c.length(), 4u);

  for (const Graph& tree : testing::trees_up_to_six()) EXPECT_TRUE(chordless_cycles(tree).cycles.empty());

  const auto k4 = chordless_cycles(named::complete(4));
  EXPECT_EQ(k4.cycles.size(), 4u);  // triangles only

  const auto capped = chordless_cycles(named::complete_bipartite(4, 4), 10);
  EXPECT_TRUE(capped.cap_exceeded);
  EXPECT_EQ(capped.cycles.size(), 10u);
  EXPECT_FALSE(chordless_cycles(named::complete_bipartite(4, 4), 36).cap_exceeded);
}

TEST(ChordlessCycles, AgreesWithBruteForce) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_graph(3 + static_cast<int>(rng() % 9), 0.35, rng);
    const auto found = chordless_cycles(g);
    ASSERT_FALSE(found.cap_exceeded);
    std::set<std::vector<int>> sets;
    for (const auto& c : found.cycles) {
      const auto& v = c.vertices;
      ASSERT_EQ(v[0], *std::min_element(v.begin(), v.end()));
      ASSERT_LT(v[1], v.back());
      auto sorted = v;
      std::sort(sorted.begin(), sorted.end());
      ASSERT_TRUE(sets.insert(sorted).second) << "duplicate cycle";
      for (std::size_t i = 0; i < v.size(); ++i) ASSERT_TRUE(g.adjacent(v[i], v[(i + 1) % v.size()]));
    }
    ASSERT_EQ(sets, testing::induced_cycle_sets_bruteforce(g));
  }
}

TEST(Uniformity, Examples) {
  const Graph c4 = named::cycle(4);
  const CycleWalk walk{{0, 1, 2, 3}};
  EXPECT_EQ(clockwise_arcs(kOddC4, walk), 3);
  EXPECT_FALSE(is_uniformly_oriented(kOddC4, walk));
  EXPECT_TRUE(is_uniformly_oriented(elementary(c4), walk));
  EXPECT_EQ(clockwise_arcs(elementary(c4), walk), 2);

  const auto c6_r3 = OrientedGraph::from_arcs(6, {{0, 1}, {1, 2}, {2, 3}, {4, 3}, {5, 4}, {0, 5}});
  EXPECT_TRUE(is_uniformly_oriented(c6_r3, CycleWalk{{0, 1, 2, 3, 4, 5}}));

  const auto tri = OrientedGraph::ascending(named::cycle(3));
  EXPECT_THROW(is_uniformly_oriented(tri, CycleWalk{{0, 1, 2}}), Error);
  EXPECT_THROW(clockwise_arcs(kOddC4, CycleWalk{{0, 2, 1, 3}}), Error);
  EXPECT_THROW(clockwise_arcs(kOddC4, CycleWalk{{0, 1, 2, 7}}), Error);
}

TEST(Uniformity, ReversingTheWalkKeepsTheVerdict) {
  std::mt19937_64 rng(71);
  const Graph c8 = named::cycle(8);
  for (int trial = 0; trial < 50; ++trial) {
    const OrientedGraph og = random_orientation(c8, rng);
    const CycleWalk fwd{{0, 1, 2, 3, 4, 5, 6, 7}};
    const CycleWalk back{{0, 7, 6, 5, 4, 3, 2, 1}};
    EXPECT_EQ(clockwise_arcs(og, fwd) + clockwise_arcs(og, back), 8);
    EXPECT_EQ(is_uniformly_oriented(og, fwd), is_uniformly_oriented(og, back));
  }
}

// The parity convention pinned against the spectral oracle on every
// orientation of C4 and C6.
TEST(Uniformity, CalibratedAgainstSpectra) {
  for (int len : {4, 6, 8}) {
    const Graph c = named::cycle(len);
    const Spectrum adj = adjacency_spectrum(c);
    CycleWalk walk;
    for (int v = 0; v < len; ++v) walk.vertices.push_back(v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
      const OrientedGraph og = orientation_from_mask(c, mask);
      const bool spectral = spectra_equal(skew_spectrum(og), adj, 1e-8);
      ASSERT_EQ(is_uniformly_oriented(og, walk), spectral) << "len " << len << " mask " << mask;
    }
  }
}

TEST(AllChordlessUniform, AgreesWithAllCycles) {
  // Checking only chordless cycles gives the same verdict as checking every
  // cycle, and both match the spectral predicate.
  std::mt19937_64 rng(73);
  int checked = 0;
  while (checked < 150) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 7), 0.5, rng);
    if (g.size() > 14) continue;
    try {
      bipartition(g);
    } catch (const NotBipartiteError&) {
      continue;
    }
    ++checked;
    const OrientedGraph og = random_orientation(g, rng);
    bool every = true;
    for (const auto& walk : testing::all_cycles_bruteforce(g)) {
      every = every && is_uniformly_oriented(og, CycleWalk{walk});
    }
    ASSERT_EQ(all_chordless_uniform(og), every);
    ASSERT_EQ(spectral_predicate(og), every);
    ASSERT_EQ(equivalent_to_elementary(og).equivalent(), every);
  }
}

TEST(AllChordlessUniform, Errors) {
  EXPECT_THROW(all_chordless_uniform(OrientedGraph::ascending(named::cycle(5))), NotBipartiteError);
  EXPECT_THROW(spectral_predicate(OrientedGraph::ascending(named::cycle(5))), NotBipartiteError);
  EXPECT_THROW(equivalent_to_elementary(OrientedGraph::ascending(named::cycle(5))), NotBipartiteError);
  const OrientedGraph k44 = elementary(named::complete_bipartite(4, 4));
  try {
    all_chordless_uniform(k44, 5);
    FAIL() << "expected cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CapExceeded);
  }
  EXPECT_TRUE(all_chordless_uniform(k44));
}

TEST(EquivalentToElementary, Examples) {
  const Graph c4 = named::cycle(4);
  EXPECT_TRUE(equivalent_to_elementary(elementary(c4)).equivalent());
  EXPECT_FALSE(equivalent_to_elementary(kOddC4).equivalent());
  const auto sw = switch_orientation(elementary(c4), {3});
  const auto res = equivalent_to_elementary(sw);
  ASSERT_TRUE(res.equivalent());
  EXPECT_EQ(switch_orientation(sw, res.witness->w), elementary(c4));

  // Bridges never matter: a tree with any orientation is equivalent.
  for (const Graph& tree : testing::trees_up_to_six()) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tree.size()); ++mask) {
      ASSERT_TRUE(equivalent_to_elementary(orientation_from_mask(tree, mask)).equivalent());
    }
  }
}

TEST(EquivalentToElementary, BridgeDoesNotAffectVerdict) {
  // Two C4s joined by a bridge 3-4: flipping the bridge changes nothing.
  const Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  const int bridge = g.edge_index(3, 4);
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    OrientedGraph og = random_orientation(g, rng);
    auto bits = og.direction();
    bits[bridge] ^= 1U;
    const OrientedGraph flipped(g, bits);
    EXPECT_EQ(equivalent_to_elementary(og).equivalent(), equivalent_to_elementary(flipped).equivalent());
    EXPECT_EQ(spectral_predicate(og), spectral_predicate(flipped));
  }
}

}  // namespace
}  // namespace skewspec

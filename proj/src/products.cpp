#include "skewspec/products.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "skewspec/kernels.hpp"

namespace skewspec {

// ---------------------------------------------------------------- vertex order

ProductVertexOrder::ProductVertexOrder(std::vector<int> sequence, int n)
    : sequence_(std::move(sequence)), position_(sequence_.size()), n_(n) {
  for (std::size_t p = 0; p < sequence_.size(); ++p) position_[sequence_[p]] = static_cast<int>(p);
}

ProductVertexOrder ProductVertexOrder::identity(int m, int n) {
  std::vector<int> seq(static_cast<std::size_t>(m));
  std::iota(seq.begin(), seq.end(), 0);
  return ProductVertexOrder(std::move(seq), n);
}

ProductVertexOrder ProductVertexOrder::x_first(const Bipartition& b, int n) {
  return ProductVertexOrder(b.x_first_order(), n);
}

// ---------------------------------------------------------------- products

Graph cartesian_product(const Graph& h, const Graph& g, const ProductVertexOrder& order) {
  if (order.h_order() != h.order() || order.g_order() != g.order()) {
    throw Error(Errc::LengthMismatch, "vertex order does not match the factors");
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(h.order()) * g.size() +
                static_cast<std::size_t>(g.order()) * h.size());
  for (int u = 0; u < h.order(); ++u) {
    for (const Edge& e : g.edges()) pairs.emplace_back(order(u, e.u), order(u, e.v));
  }
  for (const Edge& e : h.edges()) {
    for (int v = 0; v < g.order(); ++v) pairs.emplace_back(order(e.u, v), order(e.v, v));
  }
  return Graph(h.order() * g.order(), pairs);
}

Graph cartesian_product(const Graph& h, const Graph& g) {
  return cartesian_product(h, g, ProductVertexOrder::identity(h.order(), g.order()));
}

OrientedGraph oriented_product(const OrientedGraph& h, const OrientedGraph& g, FiberReversal reversal) {
  const Bipartition b = bipartition(h.graph());
  const auto order = ProductVertexOrder::x_first(b, g.order());
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<std::size_t>(h.order()) * g.size() +
               static_cast<std::size_t>(g.order()) * h.size());
  const auto g_arcs = g.arcs();
  for (int u = 0; u < h.order(); ++u) {
    const bool flip = reversal == FiberReversal::On && b.side(u) == Side::Y;
    for (auto [tail, head] : g_arcs) {
      if (flip) std::swap(tail, head);
      arcs.emplace_back(order(u, tail), order(u, head));
    }
  }
  for (auto [tail, head] : h.arcs()) {
    for (int v = 0; v < g.order(); ++v) arcs.emplace_back(order(tail, v), order(head, v));
  }
  return OrientedGraph::from_arcs(h.order() * g.order(), arcs);
}

bool product_matrix_identity_check(const OrientedGraph& h, const OrientedGraph& g, FiberReversal reversal) {
  const Bipartition b = bipartition(h.graph());
  const auto x_first = b.x_first_order();
  const int m = h.order();
  const int x_count = b.count(Side::X);
  IntMatrix signs(m);
  for (int i = 0; i < m; ++i) signs(i, i) = i < x_count ? 1 : -1;
  const IntMatrix expected = kronecker(signs, skew_adjacency(g)) +
                             kronecker(permuted(skew_adjacency(h), x_first), IntMatrix::identity(g.order()));
  return skew_adjacency(oriented_product(h, g, reversal)) == expected;
}

Spectrum predicted_product_spectrum(const Spectrum& h, const Spectrum& g) {
  constexpr double kSymmetryTol = 1e-9;
  if (!h.is_antisymmetric(kSymmetryTol) || !g.is_antisymmetric(kSymmetryTol)) {
    throw Error(Errc::LengthMismatch, "factor spectra must be symmetric about zero");
  }
  std::vector<double> moduli;
  moduli.reserve(h.size() * g.size());
  for (double mu : h.values) {
    for (double lambda : g.values) moduli.push_back(std::sqrt(mu * mu + lambda * lambda));
  }
  return pair_moduli(std::move(moduli));
}

bool verify_product_spectrum(const OrientedGraph& h, const OrientedGraph& g, double tol) {
  const OrientedGraph product = oriented_product(h, g);
  const Spectrum predicted = predicted_product_spectrum(skew_spectrum(h), skew_spectrum(g));
  return spectra_equal(skew_spectrum(product), predicted, tol);
}

// ---------------------------------------------------------------- search

MaxEnergySearch find_max_energy_orientation(const Graph& g, std::uint64_t budget) {
  if (g.order() > 0 && g.regular_degree() < 0) throw Error(Errc::NotRegular, "graph is not regular");
  auto raw = kernels::omp::search_max_orientation(g, budget);
  MaxEnergySearch out;
  out.states = raw.states;
  out.budget_hit = raw.budget_hit;
  if (raw.direction) out.orientation = OrientedGraph(g, std::move(*raw.direction));
  return out;
}

// ---------------------------------------------------------------- families

std::string_view to_string(FamilyBase base) noexcept {
  switch (base) {
    case FamilyBase::K44: return "k44";
    case FamilyBase::K4: return "k4";
    case FamilyBase::C4: return "c4";
    case FamilyBase::P2: return "p2";
  }
  return "?";
}

std::optional<FamilyBase> parse_family_base(std::string_view name) {
  for (auto base : {FamilyBase::K44, FamilyBase::K4, FamilyBase::C4, FamilyBase::P2}) {
    if (name == to_string(base)) return base;
  }
  return std::nullopt;
}

double FamilyMember::predicted_energy() const { return order * std::sqrt(static_cast<double>(degree)); }

namespace {

struct BaseShape {
  int order;
  int degree;
};

BaseShape base_shape(FamilyBase base) {
  switch (base) {
    case FamilyBase::K44: return {8, 4};
    case FamilyBase::K4: return {4, 3};
    case FamilyBase::C4: return {4, 2};
    case FamilyBase::P2: return {2, 1};
  }
  return {0, 0};
}

// Order of G_r, saturating instead of overflowing.
std::int64_t family_order(FamilySpec spec) {
  std::int64_t order = base_shape(spec.base).order;
  for (int j = 1; j < spec.r; ++j) {
    order *= 8;
    if (order > (std::int64_t{1} << 40)) return order;
  }
  return order;
}

}  // namespace

std::pair<int, int> family_shape(FamilySpec spec) {
  if (spec.r < 1) throw Error(Errc::InvalidArgument, "family depth r must be at least 1");
  const auto order = family_order(spec);
  if (order > std::numeric_limits<int>::max()) throw Error(Errc::BudgetExceeded, "family order overflows");
  return {static_cast<int>(order), base_shape(spec.base).degree + 4 * (spec.r - 1)};
}

OrientedGraph k44_max_orientation() {
  // Lexicographically first maximum-energy orientation of K_{4,4} found by
  // find_max_energy_orientation; edges in canonical order (0,4) (0,5) ... (3,7).
  static constexpr std::array<std::uint8_t, 16> kBits = {
      0, 0, 0, 0,  //
      0, 0, 1, 1,  //
      0, 1, 0, 1,  //
      0, 1, 1, 0,  //
  };
  return OrientedGraph(named::complete_bipartite(4, 4), std::vector<std::uint8_t>(kBits.begin(), kBits.end()));
}

OrientedGraph max_energy_base(FamilyBase base) {
  switch (base) {
    case FamilyBase::K44: return k44_max_orientation();
    case FamilyBase::K4: {
      static const OrientedGraph k4 = *find_max_energy_orientation(named::complete(4)).orientation;
      return k4;
    }
    case FamilyBase::C4: {
      static const OrientedGraph c4 = *find_max_energy_orientation(named::cycle(4)).orientation;
      return c4;
    }
    case FamilyBase::P2: return OrientedGraph::from_arcs(2, {{0, 1}});
  }
  throw Error(Errc::InvalidArgument, "unknown family base");
}

FamilyMember generate_family(FamilySpec spec, int vertex_cap) {
  if (spec.r < 1) throw Error(Errc::InvalidArgument, "family depth r must be at least 1");
  const auto order = family_order(spec);
  if (order > vertex_cap) {
    throw Error(Errc::BudgetExceeded, "G_" + std::to_string(spec.r) + " over " +
                                          std::string(to_string(spec.base)) + " has " +
                                          std::to_string(order) + " vertices, cap is " +
                                          std::to_string(vertex_cap));
  }
  const OrientedGraph k44 = k44_max_orientation();
  OrientedGraph current = max_energy_base(spec.base);
  for (int j = 2; j <= spec.r; ++j) current = oriented_product(k44, current);
  FamilyMember member;
  std::tie(member.order, member.degree) = family_shape(spec);
  member.graph = std::move(current);
  return member;
}

}  // namespace skewspec

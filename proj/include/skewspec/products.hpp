#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "skewspec/graph.hpp"
#include "skewspec/spectra.hpp"

namespace skewspec {

/// Labels product vertex (u, v) as position(u) * n + v, where position is a
/// permutation of H's vertices. For the oriented product, position lists the
/// X side of H first so that S = I' (x) S(G) + S(H) (x) I_n holds verbatim.
class ProductVertexOrder {
 public:
  /// position(u) = u.
  static ProductVertexOrder identity(int m, int n);
  /// X vertices of h (ascending) first, then Y vertices (ascending).
  static ProductVertexOrder x_first(const Bipartition& b, int n);

  int h_order() const noexcept { return static_cast<int>(position_.size()); }
  int g_order() const noexcept { return n_; }
  int operator()(int u, int v) const { return position_[u] * n_ + v; }
  /// H vertex at each position.
  const std::vector<int>& h_sequence() const noexcept { return sequence_; }

 private:
  ProductVertexOrder(std::vector<int> sequence, int n);

  std::vector<int> sequence_;
  std::vector<int> position_;
  int n_ = 0;
};

/// H box G. (u1, v1) ~ (u2, v2) iff u1 == u2 and v1 ~ v2 in G, or v1 == v2
/// and u1 ~ u2 in H.
Graph cartesian_product(const Graph& h, const Graph& g);
Graph cartesian_product(const Graph& h, const Graph& g, const ProductVertexOrder& order);

enum class FiberReversal { Off, On };

/// Product orientation of an oriented bipartite H with an oriented G: G-arcs
/// are copied into every H-fiber and H-arcs into every G-fiber; with
/// FiberReversal::On the G-arcs over Y-side vertices of H are reversed.
/// Vertices are labeled by ProductVertexOrder::x_first. Throws
/// NotBipartiteError for non-bipartite H.
OrientedGraph oriented_product(const OrientedGraph& h, const OrientedGraph& g,
                               FiberReversal reversal = FiberReversal::On);

/// Exact integer check of S(product) == I' (x) S(G) + S(H)' (x) I_n with H
/// permuted X-first and I' = diag(+1 on X, -1 on Y).
bool product_matrix_identity_check(const OrientedGraph& h, const OrientedGraph& g,
                                   FiberReversal reversal = FiberReversal::On);

/// Skew spectrum of the oriented product from the factor spectra: the moduli
/// are sqrt(mu^2 + lambda^2) over all m * n pairs of the signed lists, paired
/// into +- values. Throws Error{LengthMismatch} on non-antisymmetric input.
Spectrum predicted_product_spectrum(const Spectrum& h, const Spectrum& g);

/// Eigensolved skew spectrum of the product agrees with the prediction.
bool verify_product_spectrum(const OrientedGraph& h, const OrientedGraph& g,
                             double tol = kDefaultTolerance);

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 40;

struct MaxEnergySearch {
  std::optional<OrientedGraph> orientation;
  std::uint64_t states = 0;
  bool budget_hit = false;

  bool found() const noexcept { return orientation.has_value(); }
};

/// Lexicographically first direction vector (edge 0 pinned to 0) with
/// S S^T = k I. Throws Error{NotRegular}.
MaxEnergySearch find_max_energy_orientation(const Graph& g,
                                             std::uint64_t budget = kDefaultSearchBudget);

enum class FamilyBase { K44, K4, C4, P2 };

std::string_view to_string(FamilyBase base) noexcept;
std::optional<FamilyBase> parse_family_base(std::string_view name);

struct FamilySpec {
  FamilyBase base = FamilyBase::K44;
  int r = 1;
};

inline constexpr int kDefaultFamilyVertexCap = 4096;

struct FamilyMember {
  OrientedGraph graph;
  int order = 0;   // closed form
  int degree = 0;  // closed form
  /// Closed-form energy order * sqrt(degree).
  double predicted_energy() const;
};

/// Closed-form (order, degree) of G_r for the base.
std::pair<int, int> family_shape(FamilySpec spec);

/// Maximum-energy orientation of each base graph, as found by the search.
OrientedGraph max_energy_base(FamilyBase base);

/// Frozen maximum-energy orientation of K_{4,4} (parts {0..3}, {4..7}).
OrientedGraph k44_max_orientation();

/// G_1 = base, G_j = (K44 box G_{j-1})^o. Throws Error{BudgetExceeded} when
/// the order would exceed vertex_cap, Error{InvalidArgument} for r < 1.
FamilyMember generate_family(FamilySpec spec, int vertex_cap = kDefaultFamilyVertexCap);

}  // namespace skewspec

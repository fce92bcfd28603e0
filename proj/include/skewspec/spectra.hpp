#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewspec/graph.hpp"

namespace skewspec {

inline constexpr double kDefaultTolerance = 1e-8;

/// Real eigenvalues sorted descending. For a skew spectrum the values are the
/// imaginary parts: the eigenvalues of S are i * values[k].
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }

  /// Groups values equal within tol * max(1, |value|) into (value, count).
  std::vector<std::pair<double, int>> multiplicities(double tol = kDefaultTolerance) const;

  /// True if values[i] == -values[n-1-i] within tol * max(1, |values[i]|).
  bool is_antisymmetric(double tol = kDefaultTolerance) const;

  double energy() const;
};

/// Eigenvalues of an exactly symmetric integer matrix, descending.
/// Throws Error{NotSymmetric}.
Spectrum symmetric_eigenvalues(const IntMatrix& m);

/// Skew spectrum as imaginary parts, exactly antisymmetric as a list.
Spectrum skew_spectrum(const OrientedGraph& og);

/// Adjacency spectrum of the underlying undirected graph.
Spectrum adjacency_spectrum(const Graph& g);

/// Same length and |a[i] - b[i]| <= tol * max(1, |b[i]|) for all i.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol = kDefaultTolerance);

/// Builds a skew spectrum from singular values (the moduli of the skew
/// eigenvalues, each non-zero one present twice): sorts them, keeps every
/// second value for the positive half and mirrors it.
Spectrum pair_moduli(std::vector<double> moduli);

struct EnergyReport {
  double energy = 0.0;
  bool is_maximum = false;
  std::optional<int> degree;       // set when the graph is regular
  bool exact_certificate = false;  // S S^T == k I verified over the integers
};

EnergyReport skew_energy(const OrientedGraph& og);

/// Same report computed from an already known spectrum.
EnergyReport skew_energy(const OrientedGraph& og, const Spectrum& skew);

double graph_energy(const Graph& g);

/// Exact certificate S S^T == k I for the given k.
bool has_scalar_gram(const OrientedGraph& og, int k);

}  // namespace skewspec

#include "skewspec/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "skewspec/kernels.hpp"

namespace skewspec {

namespace {

Spectrum eigenvalues_descending(const Eigen::MatrixXd& a) {
  Spectrum sp;
  if (a.rows() == 0) return sp;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(Errc::InvalidArgument, "eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  sp.values.assign(ev.data(), ev.data() + ev.size());
  std::sort(sp.values.begin(), sp.values.end(), std::greater<>());
  return sp;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

std::vector<std::pair<double, int>> Spectrum::multiplicities(double tol) const {
  std::vector<std::pair<double, int>> out;
  for (double v : values) {
    if (!out.empty() && close(v, out.back().first, tol)) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

bool Spectrum::is_antisymmetric(double tol) const {
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!close(values[i], -values[n - 1 - i], tol)) return false;
  }
  return true;
}

double Spectrum::energy() const {
  return std::accumulate(values.begin(), values.end(), 0.0,
                         [](double acc, double v) { return acc + std::abs(v); });
}

Spectrum symmetric_eigenvalues(const IntMatrix& m) {
  if (!m.is_symmetric()) throw Error(Errc::NotSymmetric, "matrix is not symmetric");
  const int n = m.dim();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(m(i, j));
  }
  return eigenvalues_descending(a);
}

Spectrum pair_moduli(std::vector<double> moduli) {
  for (double& x : moduli) x = std::abs(x);
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  const std::size_t n = moduli.size();
  Spectrum sp;
  sp.values.assign(n, 0.0);
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double v = 0.5 * (moduli[2 * i] + moduli[2 * i + 1]);
    sp.values[i] = v;
    sp.values[n - 1 - i] = -v;
  }
  return sp;
}

Spectrum skew_spectrum(const OrientedGraph& og) {
  // The symmetric dilation [[0, S], [S^T, 0]] has eigenvalues +-sigma_i where
  // sigma_i are the singular values of S, i.e. the moduli of its eigenvalues.
  // This keeps the absolute error at machine precision near zero, where
  // square roots of eigenvalues of S S^T would lose half the digits.
  const int n = og.order();
  Eigen::MatrixXd dilation = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int e = 0; e < og.size(); ++e) {
    auto [tail, head] = og.arc(e);
    // S(tail, head) = 1, S(head, tail) = -1
    dilation(tail, n + head) = 1.0;
    dilation(head, n + tail) = -1.0;
    dilation(n + head, tail) = 1.0;
    dilation(n + tail, head) = -1.0;
  }
  Spectrum both = eigenvalues_descending(dilation);
  both.values.resize(static_cast<std::size_t>(n));
  return pair_moduli(std::move(both.values));
}

Spectrum adjacency_spectrum(const Graph& g) { return symmetric_eigenvalues(adjacency_matrix(g)); }

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!close(a.values[i], b.values[i], tol)) return false;
  }
  return true;
}

bool has_scalar_gram(const OrientedGraph& og, int k) { return kernels::omp::is_scalar_gram(og, k); }

EnergyReport skew_energy(const OrientedGraph& og, const Spectrum& skew) {
  EnergyReport report;
  report.energy = skew.energy();
  const int k = og.graph().regular_degree();
  if (k >= 0) {
    report.degree = k;
    report.exact_certificate = has_scalar_gram(og, k);
    report.is_maximum = report.exact_certificate;
  }
  return report;
}

EnergyReport skew_energy(const OrientedGraph& og) { return skew_energy(og, skew_spectrum(og)); }

double graph_energy(const Graph& g) { return adjacency_spectrum(g).energy(); }

}  // namespace skewspec

#include "cliquebound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "cliquebound/errors.hpp"

namespace cliquebound {

ToleranceConfig ToleranceConfig::for_graph(std::size_t n, std::size_t m) {
  ToleranceConfig cfg;
  cfg.zero_eig_tol = 1e-8 * static_cast<double>(std::max<std::size_t>(n, 1));
  cfg.identity_tol = 1e-6 * static_cast<double>(std::max<std::size_t>(1, 2 * m));
  return cfg;
}

void ToleranceConfig::validate() const {
  if (!(zero_eig_tol > 0.0 && zero_eig_tol < 0.5)) throw InputError("zero_eig_tol must lie in (0, 0.5)");
  if (!(identity_tol > 0.0)) throw InputError("identity_tol must be positive");
  if (sweep_limit <= 0) throw InputError("sweep_limit must be positive");
}

double Spectrum::trace() const {
  double sum = 0.0;
  for (double x : eigenvalues) sum += x;
  return sum;
}

double Spectrum::trace_squares() const {
  double sum = 0.0;
  for (double x : eigenvalues) sum += x * x;
  return sum;
}

SymmetricMatrix::SymmetricMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), a_(std::move(row_major)) {
  if (a_.size() != n * n) throw InputError("matrix data does not have n*n entries");
}

SymmetricMatrix SymmetricMatrix::adjacency(const Graph& g) {
  SymmetricMatrix a(g.n());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

std::vector<double> symmetric_eigenvalues(SymmetricMatrix a, const ToleranceConfig& cfg) {
  const std::size_t n = a.n();
  if (n == 0) throw InputError("eigenvalues of an empty matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) > 1e-12) throw InputError("matrix is not symmetric");

  const double target = cfg.zero_eig_tol * 1e-3;
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };

  int sweep = 0;
  while (off_norm() > target) {
    if (++sweep > cfg.sweep_limit)
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(cfg.sweep_limit) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
  }

  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = a(i, i);
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  return eigs;
}

Inertia classify_inertia(std::span<const double> eigenvalues, const ToleranceConfig& cfg) {
  Inertia in;
  for (double x : eigenvalues) {
    if (std::abs(x) <= cfg.zero_eig_tol)
      ++in.zero;
    else if (x > 0)
      ++in.positive;
    else
      ++in.negative;
  }
  return in;
}

namespace {

Spectrum summarize(std::vector<double> eigs, const ToleranceConfig& cfg) {
  Spectrum s;
  s.inertia = classify_inertia(eigs, cfg);
  s.mu = eigs.front();
  s.mu_min = eigs.back();
  for (double x : eigs) {
    if (std::abs(x) <= cfg.zero_eig_tol) continue;
    (x > 0 ? s.s_plus : s.s_minus) += x * x;
  }
  s.eigenvalues = std::move(eigs);
  return s;
}

}  // namespace

Spectrum spectrum_of(const Graph& g, const ToleranceConfig& cfg) {
  if (g.n() == 0) throw InputError("spectrum of a graph with no vertices");
  cfg.validate();
  Spectrum s = summarize(symmetric_eigenvalues(SymmetricMatrix::adjacency(g), cfg), cfg);

  const double two_m = 2.0 * static_cast<double>(g.m());
  const double n = static_cast<double>(g.n());
  const double tol = cfg.identity_tol;
  auto fail = [](const std::string& what) { throw ConsistencyError("spectral self-check failed: " + what); };

  if (std::abs(s.trace()) > tol) fail("sum of eigenvalues is not zero");
  if (std::abs(s.s_plus + s.s_minus - two_m) > tol) fail("s+ + s- differs from 2m");
  if (g.m() > 0) {
    if (s.mu < std::abs(s.mu_min) - tol) fail("mu < |mu_n|");
    if (s.mu < two_m / n - tol) fail("mu < 2m/n");
    if (s.s_plus < s.mu * s.mu - tol) fail("s+ < mu^2");
  }
  return s;
}

Spectrum spectrum_of(const Graph& g) { return spectrum_of(g, ToleranceConfig::for_graph(g.n(), g.m())); }

double trace_cube(const Graph& g, const Spectrum& spectrum, const ToleranceConfig& cfg) {
  double sum = 0.0;
  for (double x : spectrum.eigenvalues) sum += x * x * x;
  const double expected = 6.0 * static_cast<double>(triangle_count(g));
  if (std::abs(sum - expected) > cfg.identity_tol * static_cast<double>(g.n()))
    throw ConsistencyError("tr(A^3) = " + std::to_string(sum) + " but 6t = " + std::to_string(expected));
  return sum;
}

Spectrum kneser2_closed_form(unsigned p) {
  if (p < 4) throw InputError("kneser2_closed_form needs p >= 4");
  const double pd = p;
  const std::size_t n = static_cast<std::size_t>(p) * (p - 1) / 2;
  const double degree = (pd - 2) * (pd - 3) / 2;  // C(p-2, 2)
  const double negative = -(pd - 3);              // -C(p-3, 1)
  const std::size_t negative_mult = p - 1;        // C(p,1) - C(p,0)
  const std::size_t unit_mult = n - p;            // C(p,2) - C(p,1)

  std::vector<double> eigs;
  eigs.reserve(n);
  eigs.push_back(degree);
  eigs.insert(eigs.end(), unit_mult, 1.0);
  eigs.insert(eigs.end(), negative_mult, negative);
  std::sort(eigs.begin(), eigs.end(), std::greater<>());

  ToleranceConfig exact;
  exact.zero_eig_tol = 0.25;  // the closed form has no eigenvalues in (-1, 1)
  return summarize(std::move(eigs), exact);
}

}  // namespace cliquebound

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cliquebound/graph.hpp"

namespace cliquebound {

struct ToleranceConfig {
  double zero_eig_tol = 1e-8;  // |lambda| <= this counts as a zero eigenvalue
  double identity_tol = 1e-6;  // allowed residual in the trace identities
  int sweep_limit = 100;       // Jacobi sweeps before giving up

  // Defaults scaled to the graph: 1e-8 * n and 1e-6 * max(1, 2m).
  static ToleranceConfig for_graph(std::size_t n, std::size_t m);

  void validate() const;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  Inertia inertia;
  double mu = 0.0;      // largest eigenvalue
  double mu_min = 0.0;  // smallest eigenvalue
  double s_plus = 0.0;  // sum of squares of positive eigenvalues
  double s_minus = 0.0; // sum of squares of negative eigenvalues

  double trace() const;         // sum of eigenvalues
  double trace_squares() const; // sum of squared eigenvalues
};

// Dense symmetric matrix in row-major order.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
  SymmetricMatrix(std::size_t n, std::vector<double> row_major);

  static SymmetricMatrix adjacency(const Graph& g);

  std::size_t n() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

// Cyclic Jacobi. Iterates until the off-diagonal Frobenius norm drops below
// cfg.zero_eig_tol * 1e-3. Throws InputError on asymmetric input and
// ConvergenceError when cfg.sweep_limit sweeps are not enough.
std::vector<double> symmetric_eigenvalues(SymmetricMatrix matrix, const ToleranceConfig& cfg);

Inertia classify_inertia(std::span<const double> eigenvalues, const ToleranceConfig& cfg);

// Eigendecomposition of the adjacency matrix with self-checks on the
// results; throws ConsistencyError if a trace identity or eigenvalue bound
// fails beyond tolerance.
Spectrum spectrum_of(const Graph& g, const ToleranceConfig& cfg);
Spectrum spectrum_of(const Graph& g);

// Sum of cubed eigenvalues, cross-checked against 6 * triangle_count(g).
double trace_cube(const Graph& g, const Spectrum& spectrum, const ToleranceConfig& cfg);

// Exact spectrum of KG(p, 2) from its closed form.
Spectrum kneser2_closed_form(unsigned p);

}  // namespace cliquebound

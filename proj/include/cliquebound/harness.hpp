#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliquebound/bounds.hpp"
#include "cliquebound/combinatorics.hpp"
#include "cliquebound/graph.hpp"
#include "cliquebound/spectral.hpp"

namespace cliquebound {

inline constexpr int kSchemaVersion = 1;

struct EvaluationOptions {
  bool with_chi = false;
  SolveBudget budget;
  // Absolute overrides; unset means the per-graph defaults of
  // ToleranceConfig::for_graph.
  std::optional<double> zero_eig_tol;
  std::optional<double> identity_tol;
  int sweep_limit = 100;

  ToleranceConfig tolerances_for(const Graph& g) const;
};

struct SpectrumSummary {
  double mu = 0.0;
  double mu_min = 0.0;
  Inertia inertia;
  double s_plus = 0.0;
  double s_minus = 0.0;
  // |sum mu_i|, |sum mu_i^2 - 2m|, |sum mu_i^3 - 6t|
  double trace_residual = 0.0;
  double trace_sq_residual = 0.0;
  double trace_cube_residual = 0.0;

  friend bool operator==(const SpectrumSummary&, const SpectrumSummary&) = default;
};

struct GraphRecord {
  std::string source;
  std::uint64_t index = 0;  // ordering key within a campaign
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;
  double d = 0.0;
  std::optional<SpectrumSummary> spectrum;  // absent if the eigensolve failed
  std::uint64_t triangles = 0;
  bool triangle_free = true;
  bool connected = true;
  std::size_t isolated_vertices = 0;
  std::optional<std::size_t> omega;  // absent if the clique solve aborted
  std::vector<Vertex> omega_witness;
  bool clique_aborted = false;
  std::optional<std::size_t> chi;
  bool chi_aborted = false;
  std::optional<bool> weakly_perfect;
  std::vector<BoundEvaluation> evaluations;
  std::vector<BoundId> violations;
  std::vector<std::string> consistency_failures;
  // 2m/(2m - s+) > omega: the Ando-Lin value is not a lower bound on omega.
  bool ando_lin_exceeds_omega = false;
  // Falsifiable violations that disappeared under a tightened zero tolerance.
  std::size_t retracted_candidates = 0;

  bool aborted() const noexcept { return clique_aborted || chi_aborted; }
  const BoundEvaluation* find(BoundId id) const;

  friend bool operator==(const GraphRecord&, const GraphRecord&) = default;
};

GraphRecord evaluate_graph(const Graph& g, const EvaluationOptions& options, std::string source = "",
                           std::uint64_t index = 0);

struct CampaignOptions {
  EvaluationOptions eval;
  unsigned workers = 1;
  bool keep_all_records = false;  // otherwise only rows with findings are kept
};

using BoundCounts = std::array<std::uint64_t, kBoundCount>;

struct SkipEntry {
  std::uint64_t line = 0;
  std::string reason;

  friend bool operator==(const SkipEntry&, const SkipEntry&) = default;
};

struct CampaignSummary {
  std::string campaign;
  std::uint64_t total_inputs = 0;
  std::uint64_t processed = 0;
  std::uint64_t skipped = 0;
  std::uint64_t aborted = 0;
  BoundCounts evaluated{};
  BoundCounts violations{};
  BoundCounts tight{};
  std::uint64_t consistency_failures = 0;
  std::uint64_t retracted_candidates = 0;
  std::uint64_t non_bound_witnesses = 0;
  std::uint64_t triangle_free_graphs = 0;
  std::uint64_t chi_computed = 0;
  std::uint64_t weakly_perfect_graphs = 0;
  double max_trace_residual = 0.0;
  double max_trace_sq_residual = 0.0;
  double max_trace_cube_residual = 0.0;
  std::uint64_t omega_sum = 0;
  std::optional<std::size_t> min_omega;
  double conjecture1_sum = 0.0;
  std::uint64_t conjecture1_count = 0;
  std::optional<double> max_conjecture1;
  std::optional<double> min_conjecture1_slack;
  std::vector<SkipEntry> skip_log;
  std::vector<std::pair<std::string, std::string>> config;
  unsigned workers = 1;
  double wall_seconds = 0.0;

  void add(const GraphRecord& record);
  // Associative; merging shard summaries in index order reproduces a
  // sequential run exactly.
  void merge(const CampaignSummary& other);

  std::optional<double> mean_omega() const;
  std::optional<double> mean_conjecture1() const;
  bool has_proven_violation() const;
  bool has_falsifiable_violation() const;
  // 0 clean, 1 falsifiable violation, 3 consistency failure or proven bound
  // violated.
  int exit_code() const;

  // Equality ignoring wall time and worker count.
  bool same_results(const CampaignSummary& other) const;
};

struct CampaignResult {
  CampaignSummary summary;
  std::vector<GraphRecord> records;  // ordered by index
};

// Every labeled graph with 1 <= n <= n_max.
CampaignResult run_sweep(std::size_t n_max, const CampaignOptions& options);

// One graph6 string per line. Blank lines are ignored; malformed lines are
// skipped and logged. Throws InputError if the file cannot be read.
CampaignResult run_corpus(const std::filesystem::path& path, const CampaignOptions& options);
CampaignResult run_corpus_lines(const std::vector<std::string>& lines, const CampaignOptions& options,
                                const std::string& origin = "corpus");

// Trial i uses gnp_graph(n, p, derive_seed(seed, i)).
CampaignResult run_gnp_search(std::size_t n, double p, std::uint64_t trials, std::uint64_t seed,
                              const CampaignOptions& options);

struct KneserRow {
  unsigned p = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  double max_eigenvalue_deviation = 0.0;  // numeric vs closed form
  double conjecture1 = 0.0;
  double half_p_minus_one = 0.0;  // (p - 1) / 2
  std::size_t floor_half_p = 0;
  std::size_t omega = 0;
  long long margin = 0;  // 2p^2 - 9p + 6
  bool chain_holds = false;  // conjecture1 <= (p-1)/2 <= floor(p/2) = omega
  bool sign_consistent = false;  // (conjecture1 <= (p-1)/2) == (margin >= 0)
  bool spectrum_matches = false;

  friend bool operator==(const KneserRow&, const KneserRow&) = default;
};

inline constexpr double kKneserSpectrumTol = 1e-8;

struct KneserResult {
  CampaignSummary summary;
  std::vector<GraphRecord> records;
  std::vector<KneserRow> rows;
};

KneserResult run_kneser_family(unsigned p_min, unsigned p_max, const CampaignOptions& options);

}  // namespace cliquebound

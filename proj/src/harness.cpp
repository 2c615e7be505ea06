#include "cliquebound/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "cliquebound/errors.hpp"

namespace cliquebound {
namespace {

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

void fill_spectral_inputs(BoundInputs& in, const Spectrum& s) {
  in.mu = s.mu;
  in.s_plus = s.s_plus;
  in.s_minus = s.s_minus;
}

const BoundEvaluation* find_in(const std::vector<BoundEvaluation>& evals, BoundId id) {
  for (const auto& e : evals)
    if (e.id == id) return &e;
  return nullptr;
}

std::optional<double> value_of(const std::vector<BoundEvaluation>& evals, BoundId id) {
  const auto* e = find_in(evals, id);
  return e ? e->value : std::nullopt;
}

// Orderings between bound values that follow from mu >= 2m/n and
// sqrt(s+) >= mu; any failure is a numerical bug.
void check_chains(GraphRecord& r, const std::vector<std::size_t>& degrees) {
  if (r.m == 0) return;
  auto check = [&](BoundId lo, BoundId hi) {
    const auto a = value_of(r.evaluations, lo);
    const auto b = value_of(r.evaluations, hi);
    if (a && b && *a > *b + kNumericTol)
      r.consistency_failures.push_back("ordering " + std::string(to_string(lo)) + " <= " +
                                       std::string(to_string(hi)) + " failed");
  };
  check(BoundId::Turan, BoundId::Wilf);
  check(BoundId::Wilf, BoundId::Nikiforov);
  check(BoundId::Turan, BoundId::CaroWei);
  check(BoundId::Wilf, BoundId::Conjecture1);
  check(BoundId::Conjecture1, BoundId::AndoLinChi);

  const bool regular = std::adjacent_find(degrees.begin(), degrees.end(), std::not_equal_to<>()) == degrees.end();
  if (regular) {
    const auto turan = value_of(r.evaluations, BoundId::Turan);
    for (BoundId id : {BoundId::Wilf, BoundId::Nikiforov}) {
      const auto v = value_of(r.evaluations, id);
      if (turan && v && std::abs(*turan - *v) > kNumericTol)
        r.consistency_failures.push_back("regular graph: " + std::string(to_string(id)) + " differs from n/(n-d)");
    }
  }
}

bool needs_reverification(const std::vector<BoundEvaluation>& evals) {
  return std::any_of(evals.begin(), evals.end(),
                     [](const BoundEvaluation& e) { return info(e.id).falsifiable && e.violated(); });
}

std::vector<std::pair<std::string, std::string>> config_echo(const CampaignOptions& o) {
  const auto& e = o.eval;
  return {
      {"zero_eig_tol", e.zero_eig_tol ? format_double(*e.zero_eig_tol) : "1e-8*n"},
      {"identity_tol", e.identity_tol ? format_double(*e.identity_tol) : "1e-6*max(1,2m)"},
      {"sweep_limit", std::to_string(e.sweep_limit)},
      {"numeric_tol", format_double(kNumericTol)},
      {"node_budget", std::to_string(e.budget.node_limit)},
      {"time_budget_ms", std::to_string(e.budget.time_limit.count())},
      {"with_chi", e.with_chi ? "true" : "false"},
  };
}

// Runs fn(chunk) for chunk = 0..chunks-1 on `workers` threads and returns
// the results in chunk order.
template <class Fn>
std::vector<CampaignResult> run_chunks(std::size_t chunks, unsigned workers, Fn fn) {
  std::vector<CampaignResult> results(chunks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        results[c] = fn(c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = chunks;
        return;
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

CampaignResult merge_chunks(std::vector<CampaignResult> chunks, CampaignSummary summary) {
  CampaignResult out;
  out.summary = std::move(summary);
  for (auto& c : chunks) {
    out.summary.merge(c.summary);
    for (auto& r : c.records) out.records.push_back(std::move(r));
  }
  return out;
}

void keep_if_interesting(CampaignResult& chunk, GraphRecord&& record, bool keep_all) {
  chunk.summary.add(record);
  if (keep_all || !record.violations.empty() || !record.consistency_failures.empty() || record.aborted())
    chunk.records.push_back(std::move(record));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ToleranceConfig EvaluationOptions::tolerances_for(const Graph& g) const {
  ToleranceConfig cfg = ToleranceConfig::for_graph(g.n(), g.m());
  if (zero_eig_tol) cfg.zero_eig_tol = *zero_eig_tol;
  if (identity_tol) cfg.identity_tol = *identity_tol;
  cfg.sweep_limit = sweep_limit;
  return cfg;
}

const BoundEvaluation* GraphRecord::find(BoundId id) const { return find_in(evaluations, id); }

GraphRecord evaluate_graph(const Graph& g, const EvaluationOptions& options, std::string source,
                           std::uint64_t index) {
  if (g.n() == 0) throw InputError("cannot evaluate a graph with no vertices");
  GraphRecord r;
  r.source = std::move(source);
  r.index = index;
  r.graph6 = encode_graph6(g);
  r.n = g.n();
  r.m = g.m();
  const DegreeStats stats = degree_stats(g);
  r.d = stats.average;
  r.triangles = triangle_count(g);
  r.triangle_free = r.triangles == 0;
  r.connected = g.is_connected();
  r.isolated_vertices = g.isolated_vertex_count();

  const ToleranceConfig tol = options.tolerances_for(g);
  std::optional<Spectrum> spectrum;
  try {
    spectrum = spectrum_of(g, tol);
  } catch (const ConsistencyError& e) {
    r.consistency_failures.emplace_back(e.what());
  } catch (const ConvergenceError& e) {
    r.consistency_failures.emplace_back(e.what());
  }
  if (spectrum) {
    SpectrumSummary s;
    s.mu = spectrum->mu;
    s.mu_min = spectrum->mu_min;
    s.inertia = spectrum->inertia;
    s.s_plus = spectrum->s_plus;
    s.s_minus = spectrum->s_minus;
    double cube = 0.0;
    for (double x : spectrum->eigenvalues) cube += x * x * x;
    s.trace_residual = std::abs(spectrum->trace());
    s.trace_sq_residual = std::abs(spectrum->trace_squares() - 2.0 * static_cast<double>(r.m));
    s.trace_cube_residual = std::abs(cube - 6.0 * static_cast<double>(r.triangles));
    r.spectrum = s;
    try {
      trace_cube(g, *spectrum, tol);
    } catch (const ConsistencyError& e) {
      r.consistency_failures.emplace_back(e.what());
    }
  }

  const CliqueResult clique = clique_number(g, options.budget);
  if (clique.exact()) {
    r.omega = clique.omega;
    r.omega_witness = clique.witness;
  } else {
    r.clique_aborted = true;
  }
  if (options.with_chi) {
    const ColoringResult coloring = chromatic_number(g, options.budget);
    if (coloring.exact())
      r.chi = coloring.chi;
    else
      r.chi_aborted = true;
    r.weakly_perfect = is_weakly_perfect(clique, coloring);
  }
  if (!spectrum) return r;

  BoundInputs in;
  in.n = r.n;
  in.m = r.m;
  in.average_degree = stats.average;
  in.degrees = stats.degrees;
  fill_spectral_inputs(in, *spectrum);
  in.omega = r.omega;
  in.chi = r.chi;
  in.triangle_free = r.triangle_free;
  in.connected = r.connected;
  in.isolated_vertices = r.isolated_vertices;
  try {
    r.evaluations = evaluate_bounds(g, in);
  } catch (const ConsistencyError& e) {
    r.consistency_failures.emplace_back(e.what());
    return r;
  }

  if (needs_reverification(r.evaluations)) {
    ToleranceConfig tight = tol;
    tight.zero_eig_tol /= 100.0;
    try {
      fill_spectral_inputs(in, spectrum_of(g, tight));
      const auto second = evaluate_bounds(g, in);
      for (auto& e : r.evaluations) {
        if (!info(e.id).falsifiable || !e.violated()) continue;
        const auto* again = find_in(second, e.id);
        if (again && !again->violated()) {
          e = *again;
          ++r.retracted_candidates;
        }
      }
    } catch (const std::exception& e) {
      r.consistency_failures.push_back(std::string("re-verification failed: ") + e.what());
    }
  }

  for (const auto& e : r.evaluations)
    if (e.violated()) r.violations.push_back(e.id);

  if (r.omega) {
    const auto ando = value_of(r.evaluations, BoundId::AndoLinChi);
    r.ando_lin_exceeds_omega = ando && *ando > static_cast<double>(*r.omega) + kNumericTol;
  }
  check_chains(r, stats.degrees);
  return r;
}

void CampaignSummary::add(const GraphRecord& r) {
  ++total_inputs;
  if (r.aborted())
    ++aborted;
  else
    ++processed;
  for (const auto& e : r.evaluations) {
    const auto i = static_cast<std::size_t>(e.id);
    if (e.status == EvalStatus::Evaluated) ++evaluated[i];
    if (e.violated()) ++violations[i];
    if (e.tight()) ++tight[i];
  }
  if (!r.consistency_failures.empty()) ++consistency_failures;
  retracted_candidates += r.retracted_candidates;
  if (r.ando_lin_exceeds_omega) ++non_bound_witnesses;
  if (r.triangle_free) ++triangle_free_graphs;
  if (r.chi) ++chi_computed;
  if (r.weakly_perfect.value_or(false)) ++weakly_perfect_graphs;
  if (r.spectrum) {
    max_trace_residual = std::max(max_trace_residual, r.spectrum->trace_residual);
    max_trace_sq_residual = std::max(max_trace_sq_residual, r.spectrum->trace_sq_residual);
    max_trace_cube_residual = std::max(max_trace_cube_residual, r.spectrum->trace_cube_residual);
  }
  if (r.omega) {
    omega_sum += *r.omega;
    min_omega = std::min(min_omega.value_or(*r.omega), *r.omega);
  }
  if (const auto* c1 = r.find(BoundId::Conjecture1); c1 && c1->value) {
    conjecture1_sum += *c1->value;
    ++conjecture1_count;
    max_conjecture1 = std::max(max_conjecture1.value_or(*c1->value), *c1->value);
    if (c1->slack) min_conjecture1_slack = std::min(min_conjecture1_slack.value_or(*c1->slack), *c1->slack);
  }
}

void CampaignSummary::merge(const CampaignSummary& o) {
  total_inputs += o.total_inputs;
  processed += o.processed;
  skipped += o.skipped;
  aborted += o.aborted;
  for (std::size_t i = 0; i < kBoundCount; ++i) {
    evaluated[i] += o.evaluated[i];
    violations[i] += o.violations[i];
    tight[i] += o.tight[i];
  }
  consistency_failures += o.consistency_failures;
  retracted_candidates += o.retracted_candidates;
  non_bound_witnesses += o.non_bound_witnesses;
  triangle_free_graphs += o.triangle_free_graphs;
  chi_computed += o.chi_computed;
  weakly_perfect_graphs += o.weakly_perfect_graphs;
  max_trace_residual = std::max(max_trace_residual, o.max_trace_residual);
  max_trace_sq_residual = std::max(max_trace_sq_residual, o.max_trace_sq_residual);
  max_trace_cube_residual = std::max(max_trace_cube_residual, o.max_trace_cube_residual);
  omega_sum += o.omega_sum;
  if (o.min_omega) min_omega = std::min(min_omega.value_or(*o.min_omega), *o.min_omega);
  conjecture1_sum += o.conjecture1_sum;
  conjecture1_count += o.conjecture1_count;
  if (o.max_conjecture1) max_conjecture1 = std::max(max_conjecture1.value_or(*o.max_conjecture1), *o.max_conjecture1);
  if (o.min_conjecture1_slack)
    min_conjecture1_slack = std::min(min_conjecture1_slack.value_or(*o.min_conjecture1_slack), *o.min_conjecture1_slack);
  skip_log.insert(skip_log.end(), o.skip_log.begin(), o.skip_log.end());
}

std::optional<double> CampaignSummary::mean_omega() const {
  const std::uint64_t solved = processed + aborted;
  if (solved == 0 || !min_omega) return std::nullopt;
  return static_cast<double>(omega_sum) / static_cast<double>(solved);
}

std::optional<double> CampaignSummary::mean_conjecture1() const {
  if (conjecture1_count == 0) return std::nullopt;
  return conjecture1_sum / static_cast<double>(conjecture1_count);
}

bool CampaignSummary::has_proven_violation() const {
  for (const auto& b : all_bounds())
    if (!b.falsifiable && violations[static_cast<std::size_t>(b.id)] > 0) return true;
  return false;
}

bool CampaignSummary::has_falsifiable_violation() const {
  for (const auto& b : all_bounds())
    if (b.falsifiable && violations[static_cast<std::size_t>(b.id)] > 0) return true;
  return false;
}

int CampaignSummary::exit_code() const {
  if (consistency_failures > 0 || has_proven_violation()) return 3;
  if (has_falsifiable_violation()) return 1;
  return 0;
}

bool CampaignSummary::same_results(const CampaignSummary& other) const {
  auto strip = [](CampaignSummary s) {
    s.wall_seconds = 0.0;
    s.workers = 1;
    return s;
  };
  const CampaignSummary a = strip(*this);
  const CampaignSummary b = strip(other);
  return a.campaign == b.campaign && a.total_inputs == b.total_inputs && a.processed == b.processed &&
         a.skipped == b.skipped && a.aborted == b.aborted && a.evaluated == b.evaluated &&
         a.violations == b.violations && a.tight == b.tight && a.consistency_failures == b.consistency_failures &&
         a.retracted_candidates == b.retracted_candidates && a.non_bound_witnesses == b.non_bound_witnesses &&
         a.triangle_free_graphs == b.triangle_free_graphs && a.chi_computed == b.chi_computed &&
         a.weakly_perfect_graphs == b.weakly_perfect_graphs && a.max_trace_residual == b.max_trace_residual &&
         a.max_trace_sq_residual == b.max_trace_sq_residual &&
         a.max_trace_cube_residual == b.max_trace_cube_residual && a.omega_sum == b.omega_sum &&
         a.min_omega == b.min_omega && a.conjecture1_sum == b.conjecture1_sum &&
         a.conjecture1_count == b.conjecture1_count && a.max_conjecture1 == b.max_conjecture1 &&
         a.min_conjecture1_slack == b.min_conjecture1_slack && a.skip_log == b.skip_log && a.config == b.config;
}

CampaignResult run_sweep(std::size_t n_max, const CampaignOptions& options) {
  if (n_max < 1 || n_max > kEnumerationCap)
    throw InputError("sweep size must lie in 1.." + std::to_string(kEnumerationCap));
  const auto start = std::chrono::steady_clock::now();

  struct Chunk {
    std::size_t n;
    std::uint64_t first, last, offset;
  };
  constexpr std::uint64_t kChunk = 4096;
  std::vector<Chunk> chunks;
  std::uint64_t offset = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t first = 0; first < count; first += kChunk)
      chunks.push_back({n, first, std::min(count, first + kChunk), offset});
    offset += count;
  }

  auto results = run_chunks(chunks.size(), options.workers, [&](std::size_t c) {
    const Chunk& ch = chunks[c];
    CampaignResult out;
    LabeledGraphStream stream(ch.n, ch.first, ch.last);
    Graph g;
    std::uint64_t mask = 0;
    while (stream.next(g, mask)) {
      GraphRecord r = evaluate_graph(g, options.eval,
                                     "sweep:n=" + std::to_string(ch.n) + ",mask=" + std::to_string(mask),
                                     ch.offset + mask);
      keep_if_interesting(out, std::move(r), options.keep_all_records);
    }
    return out;
  });

  CampaignSummary summary;
  summary.campaign = "sweep";
  summary.config = config_echo(options);
  summary.config.emplace_back("n_max", std::to_string(n_max));
  CampaignResult out = merge_chunks(std::move(results), std::move(summary));
  out.summary.workers = options.workers;
  out.summary.wall_seconds = seconds_since(start);
  return out;
}

CampaignResult run_corpus_lines(const std::vector<std::string>& lines, const CampaignOptions& options,
                                const std::string& origin) {
  const auto start = std::chrono::steady_clock::now();
  struct Item {
    std::uint64_t line;
    Graph graph;
  };
  std::vector<Item> items;
  CampaignSummary summary;
  summary.campaign = "corpus";
  summary.config = config_echo(options);
  summary.config.emplace_back("corpus", origin);

  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::uint64_t number = i + 1;
    try {
      Graph g = parse_graph6(line);
      if (g.n() == 0) throw InputError("graph has no vertices");
      items.push_back({number, std::move(g)});
    } catch (const InputError& e) {
      ++summary.total_inputs;
      ++summary.skipped;
      summary.skip_log.push_back({number, e.what()});
    }
  }

  constexpr std::size_t kChunk = 16;
  const std::size_t chunk_count = (items.size() + kChunk - 1) / kChunk;
  auto results = run_chunks(chunk_count, options.workers, [&](std::size_t c) {
    CampaignResult out;
    for (std::size_t i = c * kChunk; i < std::min(items.size(), (c + 1) * kChunk); ++i) {
      GraphRecord r = evaluate_graph(items[i].graph, options.eval, origin + ":" + std::to_string(items[i].line),
                                     items[i].line);
      out.summary.add(r);
      out.records.push_back(std::move(r));
    }
    return out;
  });
  CampaignResult out = merge_chunks(std::move(results), std::move(summary));
  out.summary.workers = options.workers;
  out.summary.wall_seconds = seconds_since(start);
  return out;
}

CampaignResult run_corpus(const std::filesystem::path& path, const CampaignOptions& options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read corpus file " + path.string());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  if (in.bad()) throw InputError("error while reading " + path.string());
  return run_corpus_lines(lines, options, path.string());
}

CampaignResult run_gnp_search(std::size_t n, double p, std::uint64_t trials, std::uint64_t seed,
                              const CampaignOptions& options) {
  if (trials < 1) throw InputError("gnp search needs at least one trial");
  if (n < 1) throw InputError("gnp search needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  const auto start = std::chrono::steady_clock::now();

  auto results = run_chunks(trials, options.workers, [&](std::size_t trial) {
    CampaignResult out;
    const std::uint64_t trial_seed = derive_seed(seed, trial);
    std::ostringstream source;
    source << "gnp:n=" << n << ",p=" << format_double(p) << ",seed=" << seed << ",trial=" << trial
           << ",trial_seed=" << trial_seed;
    keep_if_interesting(out, evaluate_graph(gnp_graph(n, p, trial_seed), options.eval, source.str(), trial),
                        options.keep_all_records);
    return out;
  });

  CampaignSummary summary;
  summary.campaign = "gnp";
  summary.config = config_echo(options);
  summary.config.emplace_back("n", std::to_string(n));
  summary.config.emplace_back("p", format_double(p));
  summary.config.emplace_back("trials", std::to_string(trials));
  summary.config.emplace_back("seed", std::to_string(seed));
  summary.config.emplace_back("rng", "mt19937_64 seeded per trial by splitmix64(seed)");
  CampaignResult out = merge_chunks(std::move(results), std::move(summary));
  out.summary.workers = options.workers;
  out.summary.wall_seconds = seconds_since(start);
  return out;
}

KneserResult run_kneser_family(unsigned p_min, unsigned p_max, const CampaignOptions& options) {
  if (p_min < 4 || p_min > p_max) throw InputError("kneser family needs 4 <= p_min <= p_max");
  const auto start = std::chrono::steady_clock::now();
  KneserResult out;
  out.summary.campaign = "kneser";
  out.summary.config = config_echo(options);
  out.summary.config.emplace_back("p_min", std::to_string(p_min));
  out.summary.config.emplace_back("p_max", std::to_string(p_max));

  for (unsigned p = p_min; p <= p_max; ++p) {
    const Graph g = kneser_graph(p, 2);
    GraphRecord record = evaluate_graph(g, options.eval, "kneser:p=" + std::to_string(p), p);

    KneserRow row;
    row.p = p;
    row.n = g.n();
    row.m = g.m();
    const Spectrum closed = kneser2_closed_form(p);
    try {
      const Spectrum numeric = spectrum_of(g, options.eval.tolerances_for(g));
      for (std::size_t i = 0; i < numeric.eigenvalues.size(); ++i)
        row.max_eigenvalue_deviation =
            std::max(row.max_eigenvalue_deviation, std::abs(numeric.eigenvalues[i] - closed.eigenvalues[i]));
      row.spectrum_matches = closed.eigenvalues.size() == numeric.eigenvalues.size() &&
                             row.max_eigenvalue_deviation <= kKneserSpectrumTol;
    } catch (const std::exception& e) {
      record.consistency_failures.push_back(std::string("kneser spectrum: ") + e.what());
    }
    const auto* c1 = record.find(BoundId::Conjecture1);
    row.conjecture1 = c1 && c1->value ? *c1->value : std::nan("");
    row.half_p_minus_one = (static_cast<double>(p) - 1.0) / 2.0;
    row.floor_half_p = p / 2;
    row.omega = record.omega.value_or(0);
    const long long pl = p;
    row.margin = 2 * pl * pl - 9 * pl + 6;
    const bool below_half = row.conjecture1 <= row.half_p_minus_one + kNumericTol;
    row.chain_holds = below_half && row.half_p_minus_one <= static_cast<double>(row.floor_half_p) &&
                      record.omega == row.floor_half_p;
    row.sign_consistent = below_half == (row.margin >= 0);

    if (!row.spectrum_matches) record.consistency_failures.emplace_back("kneser spectrum differs from closed form");
    if (!row.chain_holds) record.consistency_failures.emplace_back("kneser chain conjecture1 <= (p-1)/2 <= omega failed");
    if (!row.sign_consistent) record.consistency_failures.emplace_back("kneser margin sign disagrees with chain");

    out.summary.add(record);
    out.records.push_back(std::move(record));
    out.rows.push_back(row);
  }
  out.summary.workers = options.workers;
  out.summary.wall_seconds = seconds_since(start);
  return out;
}

}  // namespace cliquebound

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Usage: acceptance [--workers W]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cliquebound/harness.hpp"
#include "cliquebound/report.hpp"
#include "oracles.hpp"

using namespace cliquebound;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::uint64_t count(const BoundCounts& c, BoundId id) { return c[static_cast<std::size_t>(id)]; }

std::string jsonl(const std::vector<GraphRecord>& records) {
  std::ostringstream out;
  write_jsonl(out, records);
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  unsigned workers = 8;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--workers") == 0) workers = static_cast<unsigned>(std::stoul(argv[i + 1]));

  int failures = 0;
  auto report = [&](const char* id, const char* title, const std::function<Outcome()>& run) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %-4s %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
  };

  CampaignOptions sweep_options;
  sweep_options.workers = workers;
  CampaignResult sweep7;
  double sweep7_seconds = 0.0;
  {
    const auto start = std::chrono::steady_clock::now();
    sweep7 = run_sweep(7, sweep_options);
    sweep7_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  const CampaignSummary& s7 = sweep7.summary;

  report("C1", "trace identities over the n <= 7 labeled sweep", [&] {
    Outcome o;
    o.require(s7.total_inputs == 1 + 2 + 8 + 64 + 1024 + 32768 + 2097152, "wrong graph count");
    o.require(s7.max_trace_residual <= 1e-6, "|sum mu| = " + fmt(s7.max_trace_residual));
    o.require(s7.max_trace_sq_residual <= 1e-6, "|sum mu^2 - 2m| = " + fmt(s7.max_trace_sq_residual));
    o.require(s7.max_trace_cube_residual <= 1e-5, "|sum mu^3 - 6t| = " + fmt(s7.max_trace_cube_residual));
    o.require(s7.consistency_failures == 0, fmt(double(s7.consistency_failures)) + " consistency failures");
    o.require(sweep7_seconds < 15 * 60, "sweep took " + fmt(sweep7_seconds) + "s");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("max residuals ") + fmt(s7.max_trace_residual) + ", " +
                fmt(s7.max_trace_sq_residual) + ", " + fmt(s7.max_trace_cube_residual);
    return o;
  });

  report("C2", "zero conjecture1 violations over the n <= 7 sweep", [&] {
    Outcome o;
    o.require(count(s7.evaluated, BoundId::Conjecture1) == s7.total_inputs, "conjecture1 not evaluated everywhere");
    o.require(count(s7.violations, BoundId::Conjecture1) == 0,
              fmt(double(count(s7.violations, BoundId::Conjecture1))) + " violations");
    o.require(s7.min_conjecture1_slack && *s7.min_conjecture1_slack >= -kNumericTol, "negative slack");
    return o;
  });

  report("C3", "KG(p,2) closed form, chain and margin sign for p = 4..12", [&] {
    Outcome o;
    const KneserResult k = run_kneser_family(4, 12, sweep_options);
    o.require(k.rows.size() == 9, "row count");
    for (const auto& row : k.rows) {
      const std::string p = "p=" + std::to_string(row.p) + ": ";
      o.require(row.max_eigenvalue_deviation <= 1e-8, p + "eigenvalue deviation " + fmt(row.max_eigenvalue_deviation));
      o.require(row.conjecture1 <= row.half_p_minus_one + kNumericTol, p + "conjecture1 above (p-1)/2");
      o.require(row.half_p_minus_one <= double(row.floor_half_p), p + "(p-1)/2 above floor(p/2)");
      o.require(row.omega == row.floor_half_p, p + "omega != floor(p/2)");
      o.require(row.margin >= 0 && row.sign_consistent, p + "margin sign");
    }
    o.require(k.rows.size() >= 2 && k.rows[0].margin == 2 && k.rows[1].margin == 11, "margins at p=4,5");
    o.require(k.summary.exit_code() == 0, "campaign exit code " + std::to_string(k.summary.exit_code()));
    return o;
  });

  report("C4", "triangle-free chain s- >= mu^2, sqrt(s+) <= n/2", [&] {
    Outcome o;
    o.require(s7.triangle_free_graphs > 0, "no triangle-free graphs");
    o.require(count(s7.evaluated, BoundId::TriangleFreeSminus) == s7.triangle_free_graphs, "s- check coverage");
    o.require(count(s7.evaluated, BoundId::TriangleFreeSplus) == s7.triangle_free_graphs, "s+ check coverage");
    o.require(count(s7.violations, BoundId::TriangleFreeSminus) == 0, "s- >= mu^2 violated");
    o.require(count(s7.violations, BoundId::TriangleFreeSplus) == 0, "sqrt(s+) <= n/2 violated");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(s7.triangle_free_graphs) + " triangle-free graphs";
    return o;
  });

  report("C5", "proven bounds never violated (chi bounds on the n <= 6 sweep)", [&] {
    Outcome o;
    CampaignOptions chi_options = sweep_options;
    chi_options.eval.with_chi = true;
    const CampaignResult s6 = run_sweep(6, chi_options);
    for (const auto* s : {&s7, &s6.summary}) {
      for (const auto& b : all_bounds()) {
        if (b.falsifiable) continue;
        const auto v = count(s->violations, b.id);
        o.require(v == 0, std::string(b.name) + " violated " + std::to_string(v) + " times");
      }
      o.require(s->exit_code() != 3, "exit code 3");
    }
    for (BoundId id : {BoundId::EdwardsElphickChi, BoundId::AndoLinChi, BoundId::WuElphickChiUpper})
      o.require(count(s6.summary.evaluated, id) > 0, std::string(to_string(id)) + " never evaluated against chi");
    o.require(s6.summary.chi_computed == s6.summary.total_inputs, "chi missing on some graphs");
    for (BoundId id : {BoundId::Turan, BoundId::CaroWei, BoundId::Wilf, BoundId::Nikiforov, BoundId::FavaronUpper,
                       BoundId::StanleyMu, BoundId::WuElphickSplus, BoundId::HongMu})
      o.require(count(s7.evaluated, id) > 0, std::string(to_string(id)) + " never evaluated");
    return o;
  });

  report("C6", "C7 witness: 2m/(2m - s+) > omega while Ando-Lin <= chi", [&] {
    Outcome o;
    CampaignOptions opt;
    opt.eval.with_chi = true;
    const CampaignResult r = run_corpus_lines({encode_graph6(cycle_graph(7))}, opt, "c7");
    o.require(r.records.size() == 1, "record count");
    if (r.records.empty()) return o;
    const GraphRecord& rec = r.records[0];
    const auto* ando = rec.find(BoundId::AndoLinChi);
    o.require(ando && ando->value && std::abs(*ando->value - 2.03194) <= 1e-4,
              "ando_lin value " + (ando && ando->value ? fmt(*ando->value) : std::string("missing")));
    o.require(rec.omega == 2u && rec.chi == 3u, "omega/chi");
    o.require(rec.ando_lin_exceeds_omega, "witness not flagged");
    o.require(ando && ando->status == EvalStatus::Evaluated && ando->holds, "Ando-Lin <= chi failed");
    o.require(r.summary.non_bound_witnesses == 1, "summary witness count");
    return o;
  });

  report("C7", "tightness fixtures K33, K222 (conjecture1) and K5 (Stanley, Hong)", [&] {
    Outcome o;
    for (const auto& parts : {std::vector<std::size_t>{3, 3}, std::vector<std::size_t>{2, 2, 2}}) {
      const GraphRecord r = evaluate_graph(complete_multipartite(parts), {});
      const auto* c1 = r.find(BoundId::Conjecture1);
      o.require(c1 && c1->slack && std::abs(*c1->slack) <= 1e-6, "conjecture1 not tight on " + r.graph6);
    }
    const GraphRecord k5 = evaluate_graph(complete_graph(5), {});
    const auto* stanley = k5.find(BoundId::StanleyMu);
    const auto* hong = k5.find(BoundId::HongMu);
    o.require(stanley && std::abs(*stanley->value - 4.0) <= 1e-9 && std::abs(*stanley->target - 4.0) <= 1e-9,
              "Stanley equality");
    o.require(hong && std::abs(*hong->value - 16.0) <= 1e-9 && std::abs(*hong->target - 16.0) <= 1e-9,
              "Hong equality");
    return o;
  });

  CampaignOptions gnp_options;
  gnp_options.workers = workers;
  gnp_options.keep_all_records = true;
  constexpr std::uint64_t kGnpSeed = 20180410;
  CampaignResult gnp_first;
  report("C8", "20 samples of G(100, 1/2): conjecture1 < 4 and omega >= 8", [&] {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    gnp_first = run_gnp_search(100, 0.5, 20, kGnpSeed, gnp_options);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(gnp_first.records.size() == 20, "record count");
    for (const auto& r : gnp_first.records) {
      const auto* c1 = r.find(BoundId::Conjecture1);
      o.require(c1 && c1->value && *c1->value < 4.0, r.source + ": conjecture1 >= 4");
      o.require(r.omega && *r.omega >= 8, r.source + ": omega < 8 or aborted");
    }
    o.require(secs < 300, "took " + fmt(secs) + "s");
    if (o.pass)
      o.detail = "max conjecture1 " + fmt(*gnp_first.summary.max_conjecture1) + ", min omega " +
                 std::to_string(*gnp_first.summary.min_omega);
    return o;
  });

  report("C9", "branch and bound vs brute force on 500 random graphs with n <= 8", [&] {
    Outcome o;
    std::mt19937 rng(500);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
      const Graph g = oracle::random_graph(rng, size(rng), density(rng));
      const auto omega = clique_number(g);
      const auto chi = chromatic_number(g);
      o.require(omega.exact() && omega.omega == oracle::clique_number(g), "omega mismatch on " + encode_graph6(g));
      o.require(chi.exact() && chi.chi == oracle::chromatic_number(g), "chi mismatch on " + encode_graph6(g));
      o.require(triangle_count(g) == oracle::triangles(g), "triangle mismatch on " + encode_graph6(g));
    }
    return o;
  });

  report("C10", "determinism: repeated G(n,p) JSONL and 1 vs W worker sweeps", [&] {
    Outcome o;
    const CampaignResult again = run_gnp_search(100, 0.5, 20, kGnpSeed, gnp_options);
    const std::string a = jsonl(gnp_first.records), b = jsonl(again.records);
    o.require(!a.empty() && a == b, "gnp JSONL differs");
    CampaignOptions single = sweep_options;
    single.workers = 1;
    CampaignOptions multi = sweep_options;
    multi.workers = std::max(workers, 2u);
    const CampaignResult one = run_sweep(7, single);
    const CampaignResult many = run_sweep(7, multi);
    o.require(one.summary.same_results(many.summary), "sweep summaries differ between worker counts");
    o.require(jsonl(one.records) == jsonl(many.records), "sweep records differ between worker counts");
    o.require(one.summary.same_results(s7), "sweep summary differs from the first run");
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

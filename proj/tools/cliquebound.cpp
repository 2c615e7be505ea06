// Command line front end for the clique-bound verification harness.
//
// Exit codes: 0 clean, 1 conjecture1/elphick_splus violation,
// 2 input error, 3 internal consistency failure or proven bound violated.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cliquebound/errors.hpp"
#include "cliquebound/harness.hpp"
#include "cliquebound/report.hpp"

namespace cb = cliquebound;

namespace {

constexpr int kInputErrorExit = 2;
constexpr int kInternalErrorExit = 3;

struct CommonFlags {
  double tol_zero = 0.0;
  double tol_identity = 0.0;
  std::string format = "jsonl";
  std::string out;
  unsigned workers = 1;
  std::uint64_t node_budget = cb::SolveBudget{}.node_limit;
  long long time_budget_ms = 0;
  bool with_chi = false;
  bool keep_all = false;

  cb::CampaignOptions options() const {
    cb::CampaignOptions o;
    if (tol_zero > 0.0) o.eval.zero_eig_tol = tol_zero;
    if (tol_identity > 0.0) o.eval.identity_tol = tol_identity;
    o.eval.with_chi = with_chi;
    o.eval.budget.node_limit = node_budget;
    o.eval.budget.time_limit = std::chrono::milliseconds(time_budget_ms);
    o.workers = std::max(1u, workers);
    o.keep_all_records = keep_all;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--tol-zero", f.tol_zero, "Absolute zero-eigenvalue threshold (default 1e-8*n)")
      ->envname("CLIQUEBOUND_TOL_ZERO");
  cmd->add_option("--tol-identity", f.tol_identity, "Absolute trace-identity tolerance (default 1e-6*max(1,2m))")
      ->envname("CLIQUEBOUND_TOL_IDENTITY");
  cmd->add_option("--format", f.format, "Record format: jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->envname("CLIQUEBOUND_FORMAT");
  cmd->add_option("--out", f.out, "Write records here (summary goes to PATH.summary.json)")
      ->envname("CLIQUEBOUND_OUT");
  cmd->add_option("--workers", f.workers, "Worker threads")->envname("CLIQUEBOUND_WORKERS");
  cmd->add_option("--node-budget", f.node_budget, "Branch-and-bound node limit per solve")
      ->envname("CLIQUEBOUND_NODE_BUDGET");
  cmd->add_option("--time-budget-ms", f.time_budget_ms, "Wall-clock limit per solve, 0 = none")
      ->envname("CLIQUEBOUND_TIME_BUDGET_MS");
  cmd->add_flag("--with-chi", f.with_chi, "Also compute the exact chromatic number")->envname("CLIQUEBOUND_WITH_CHI");
}

void emit_records(const std::vector<cb::GraphRecord>& records, const cb::CampaignSummary& summary,
                  const CommonFlags& f, bool records_to_stdout) {
  const auto format = cb::parse_report_format(f.format);
  if (!f.out.empty()) {
    cb::write_report(records, summary, format, f.out);
  } else if (records_to_stdout) {
    if (format == cb::ReportFormat::Jsonl)
      cb::write_jsonl(std::cout, records);
    else
      cb::write_csv(std::cout, records);
  }
}

void print_summary(const cb::CampaignSummary& summary, cb::Json extra = {}) {
  cb::Json j = cb::summary_to_json(summary);
  for (auto& [k, v] : extra.items()) j[k] = v;
  std::cout << j.dump(2) << '\n';
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw cb::InputError("cannot read " + path.string());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral clique-number bounds: invariants, sweeps and conjecture checks"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* invariants = app.add_subcommand("invariants", "Evaluate one graph6 string or every graph in a file");
  std::string input;
  bool edge_list = false;
  invariants->add_option("input", input, "graph6 string or path to a graph6 / edge-list file")->required();
  invariants->add_flag("--edge-list", edge_list, "Treat the input file as a 0-indexed edge list");
  add_common(invariants, flags);

  auto* check = app.add_subcommand("check", "Verify every graph of a graph6 corpus");
  std::string corpus;
  check->add_option("--corpus", corpus, "graph6 file, one graph per line")->required();
  add_common(check, flags);

  auto* sweep = app.add_subcommand("sweep", "Exhaustive sweep over all labeled graphs up to n-max vertices");
  std::size_t n_max = 0;
  sweep->add_option("--n-max", n_max, "Largest vertex count")->required()->envname("CLIQUEBOUND_N_MAX");
  sweep->add_flag("--keep-all", flags.keep_all, "Emit a record for every graph, not only findings");
  add_common(sweep, flags);

  auto* gnp = app.add_subcommand("gnp", "Seeded G(n, p) search");
  std::size_t gnp_n = 0;
  double gnp_p = 0.5;
  std::uint64_t trials = 1, seed = 0;
  gnp->add_option("--n", gnp_n, "Vertex count")->required();
  gnp->add_option("--p", gnp_p, "Edge probability")->required();
  gnp->add_option("--trials", trials, "Number of samples")->required();
  gnp->add_option("--seed", seed, "Master seed")->required()->envname("CLIQUEBOUND_SEED");
  gnp->add_flag("--keep-all", flags.keep_all, "Emit a record for every trial, not only findings");
  add_common(gnp, flags);

  auto* kneser = app.add_subcommand("kneser", "Check the KG(p,2) family against its closed-form spectrum");
  unsigned p_min = 4, p_max = 12;
  kneser->add_option("--p-min", p_min, "Smallest p (>= 4)")->required();
  kneser->add_option("--p-max", p_max, "Largest p")->required();
  add_common(kneser, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputErrorExit;
  }

  try {
    const cb::CampaignOptions options = flags.options();
    options.eval.tolerances_for(cb::empty_graph(1)).validate();
    (void)cb::parse_report_format(flags.format);

    if (*invariants) {
      std::vector<std::string> lines;
      std::string origin = "argv";
      if (std::filesystem::is_regular_file(input)) {
        origin = input;
        if (edge_list) {
          std::ifstream in(input);
          std::stringstream buf;
          buf << in.rdbuf();
          lines.push_back(cb::encode_graph6(cb::parse_edge_list(buf.str())));
        } else {
          lines = read_lines(input);
        }
      } else {
        lines.push_back(input);
      }
      auto result = cb::run_corpus_lines(lines, options, origin);
      for (const auto& skip : result.summary.skip_log)
        std::cerr << origin << ":" << skip.line << ": skipped: " << skip.reason << '\n';
      if (result.summary.skipped > 0 && result.records.empty()) return kInputErrorExit;
      emit_records(result.records, result.summary, flags, true);
      return result.summary.exit_code();
    }
    if (*check) {
      auto result = cb::run_corpus(corpus, options);
      for (const auto& skip : result.summary.skip_log)
        std::cerr << corpus << ":" << skip.line << ": skipped: " << skip.reason << '\n';
      emit_records(result.records, result.summary, flags, false);
      print_summary(result.summary);
      return result.summary.exit_code();
    }
    if (*sweep) {
      auto result = cb::run_sweep(n_max, options);
      emit_records(result.records, result.summary, flags, false);
      print_summary(result.summary);
      return result.summary.exit_code();
    }
    if (*gnp) {
      auto result = cb::run_gnp_search(gnp_n, gnp_p, trials, seed, options);
      emit_records(result.records, result.summary, flags, false);
      print_summary(result.summary);
      return result.summary.exit_code();
    }
    if (*kneser) {
      auto result = cb::run_kneser_family(p_min, p_max, options);
      emit_records(result.records, result.summary, flags, false);
      print_summary(result.summary, {{"kneser_rows", cb::kneser_rows_to_json(result.rows)}});
      return result.summary.exit_code();
    }
  } catch (const cb::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputErrorExit;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalErrorExit;
  }
  return 0;
}

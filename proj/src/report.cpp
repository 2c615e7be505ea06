#include "cliquebound/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "cliquebound/errors.hpp"

namespace cliquebound {
namespace {

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

template <class T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string csv_number(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "jsonl") return ReportFormat::Jsonl;
  if (name == "csv") return ReportFormat::Csv;
  throw InputError("unknown report format '" + name + "' (expected jsonl or csv)");
}

Json record_to_json(const GraphRecord& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["source"] = r.source;
  j["index"] = r.index;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["d"] = r.d;
  const auto& s = r.spectrum;
  j["mu"] = s ? Json(s->mu) : Json(nullptr);
  j["mu_min"] = s ? Json(s->mu_min) : Json(nullptr);
  j["pi"] = s ? Json(s->inertia.positive) : Json(nullptr);
  j["nu"] = s ? Json(s->inertia.negative) : Json(nullptr);
  j["gamma"] = s ? Json(s->inertia.zero) : Json(nullptr);
  j["s_plus"] = s ? Json(s->s_plus) : Json(nullptr);
  j["s_minus"] = s ? Json(s->s_minus) : Json(nullptr);
  j["trace_residual"] = s ? Json(s->trace_residual) : Json(nullptr);
  j["trace_sq_residual"] = s ? Json(s->trace_sq_residual) : Json(nullptr);
  j["trace_cube_residual"] = s ? Json(s->trace_cube_residual) : Json(nullptr);
  j["t"] = r.triangles;
  j["triangle_free"] = r.triangle_free;
  j["connected"] = r.connected;
  j["isolated_vertices"] = r.isolated_vertices;
  j["omega"] = r.omega ? Json(*r.omega) : Json(nullptr);
  j["omega_witness"] = r.omega_witness;
  j["clique_aborted"] = r.clique_aborted;
  j["chi"] = r.chi ? Json(*r.chi) : Json(nullptr);
  j["chi_aborted"] = r.chi_aborted;
  j["weakly_perfect"] = r.weakly_perfect ? Json(*r.weakly_perfect) : Json(nullptr);
  j["ando_lin_exceeds_omega"] = r.ando_lin_exceeds_omega;
  j["retracted_candidates"] = r.retracted_candidates;
  Json evals = Json::object();
  for (const auto& e : r.evaluations) {
    evals[std::string(to_string(e.id))] = {
        {"kind", to_string(e.kind)},     {"status", to_string(e.status)},  {"value", optional_number(e.value)},
        {"target", optional_number(e.target)}, {"slack", optional_number(e.slack)}, {"holds", e.holds},
    };
  }
  j["evaluations"] = std::move(evals);
  Json violations = Json::array();
  for (BoundId id : r.violations) violations.push_back(to_string(id));
  j["violations"] = std::move(violations);
  j["consistency_failures"] = r.consistency_failures;
  return j;
}

GraphRecord record_from_json(const Json& j) {
  if (j.value("schema_version", 0) != kSchemaVersion) throw InputError("unsupported record schema_version");
  GraphRecord r;
  r.source = j.at("source").get<std::string>();
  r.index = j.at("index").get<std::uint64_t>();
  r.graph6 = j.at("graph6").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.d = j.at("d").get<double>();
  if (!j.at("mu").is_null()) {
    SpectrumSummary s;
    s.mu = j.at("mu").get<double>();
    s.mu_min = j.at("mu_min").get<double>();
    s.inertia = {j.at("pi").get<std::size_t>(), j.at("nu").get<std::size_t>(), j.at("gamma").get<std::size_t>()};
    s.s_plus = j.at("s_plus").get<double>();
    s.s_minus = j.at("s_minus").get<double>();
    s.trace_residual = j.at("trace_residual").get<double>();
    s.trace_sq_residual = j.at("trace_sq_residual").get<double>();
    s.trace_cube_residual = j.at("trace_cube_residual").get<double>();
    r.spectrum = s;
  }
  r.triangles = j.at("t").get<std::uint64_t>();
  r.triangle_free = j.at("triangle_free").get<bool>();
  r.connected = j.at("connected").get<bool>();
  r.isolated_vertices = j.at("isolated_vertices").get<std::size_t>();
  r.omega = optional_from<std::size_t>(j, "omega");
  r.omega_witness = j.at("omega_witness").get<std::vector<Vertex>>();
  r.clique_aborted = j.at("clique_aborted").get<bool>();
  r.chi = optional_from<std::size_t>(j, "chi");
  r.chi_aborted = j.at("chi_aborted").get<bool>();
  r.weakly_perfect = optional_from<bool>(j, "weakly_perfect");
  r.ando_lin_exceeds_omega = j.at("ando_lin_exceeds_omega").get<bool>();
  r.retracted_candidates = j.at("retracted_candidates").get<std::size_t>();
  for (const auto& [name, ej] : j.at("evaluations").items()) {
    const auto id = bound_from_string(name);
    const auto kind = kind_from_string(ej.at("kind").get<std::string>());
    const auto status = status_from_string(ej.at("status").get<std::string>());
    if (!id || !kind || !status) throw InputError("unknown bound, kind or status in record");
    BoundEvaluation e;
    e.id = *id;
    e.kind = *kind;
    e.status = *status;
    e.value = optional_from<double>(ej, "value");
    e.target = optional_from<double>(ej, "target");
    e.slack = optional_from<double>(ej, "slack");
    e.holds = ej.at("holds").get<bool>();
    r.evaluations.push_back(e);
  }
  for (const auto& v : j.at("violations")) {
    const auto id = bound_from_string(v.get<std::string>());
    if (!id) throw InputError("unknown bound id in violations");
    r.violations.push_back(*id);
  }
  r.consistency_failures = j.at("consistency_failures").get<std::vector<std::string>>();
  return r;
}

Json summary_to_json(const CampaignSummary& s) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["campaign"] = s.campaign;
  j["total_inputs"] = s.total_inputs;
  j["processed"] = s.processed;
  j["skipped"] = s.skipped;
  j["aborted"] = s.aborted;
  Json bounds = Json::object();
  for (const auto& b : all_bounds()) {
    const auto i = static_cast<std::size_t>(b.id);
    bounds[std::string(b.name)] = {{"kind", to_string(b.kind)},
                                   {"falsifiable", b.falsifiable},
                                   {"evaluated", s.evaluated[i]},
                                   {"violations", s.violations[i]},
                                   {"tight", s.tight[i]}};
  }
  j["bounds"] = std::move(bounds);
  j["consistency_failures"] = s.consistency_failures;
  j["retracted_candidates"] = s.retracted_candidates;
  j["non_bound_witnesses"] = s.non_bound_witnesses;
  j["triangle_free_graphs"] = s.triangle_free_graphs;
  j["chi_computed"] = s.chi_computed;
  j["weakly_perfect_graphs"] = s.weakly_perfect_graphs;
  j["max_trace_residual"] = s.max_trace_residual;
  j["max_trace_sq_residual"] = s.max_trace_sq_residual;
  j["max_trace_cube_residual"] = s.max_trace_cube_residual;
  j["mean_omega"] = optional_number(s.mean_omega());
  j["min_omega"] = s.min_omega ? Json(*s.min_omega) : Json(nullptr);
  j["mean_conjecture1"] = optional_number(s.mean_conjecture1());
  j["max_conjecture1"] = optional_number(s.max_conjecture1);
  j["min_conjecture1_slack"] = optional_number(s.min_conjecture1_slack);
  Json skips = Json::array();
  for (const auto& e : s.skip_log) skips.push_back({{"line", e.line}, {"reason", e.reason}});
  j["skip_log"] = std::move(skips);
  Json config = Json::object();
  for (const auto& [k, v] : s.config) config[k] = v;
  j["config"] = std::move(config);
  j["workers"] = s.workers;
  j["wall_seconds"] = s.wall_seconds;
  j["exit_code"] = s.exit_code();
  return j;
}

Json kneser_rows_to_json(const std::vector<KneserRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"p", r.p},
                   {"n", r.n},
                   {"m", r.m},
                   {"max_eigenvalue_deviation", r.max_eigenvalue_deviation},
                   {"spectrum_matches", r.spectrum_matches},
                   {"conjecture1", std::isnan(r.conjecture1) ? Json(nullptr) : Json(r.conjecture1)},
                   {"half_p_minus_one", r.half_p_minus_one},
                   {"floor_half_p", r.floor_half_p},
                   {"omega", r.omega},
                   {"margin", r.margin},
                   {"chain_holds", r.chain_holds},
                   {"sign_consistent", r.sign_consistent}});
  }
  return out;
}

void write_jsonl(std::ostream& out, const std::vector<GraphRecord>& records) {
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
}

std::vector<std::string> csv_header() {
  std::vector<std::string> h{"source", "index",   "graph6", "n",     "m",   "d",     "mu",       "mu_min",
                             "pi",     "nu",      "gamma",  "s_plus", "s_minus", "t", "omega", "chi", "violations"};
  for (const auto& b : all_bounds()) {
    h.push_back(std::string(b.name) + ".value");
    h.push_back(std::string(b.name) + ".slack");
  }
  return h;
}

void write_csv(std::ostream& out, const std::vector<GraphRecord>& records) {
  auto emit = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  };
  emit(csv_header());
  for (const auto& r : records) {
    const auto& s = r.spectrum;
    auto num = [](const std::optional<double>& x) { return x ? csv_number(*x) : std::string(); };
    std::string violations;
    for (BoundId id : r.violations) violations += (violations.empty() ? "" : ";") + std::string(to_string(id));
    std::vector<std::string> row{
        r.source,
        std::to_string(r.index),
        r.graph6,
        std::to_string(r.n),
        std::to_string(r.m),
        csv_number(r.d),
        s ? csv_number(s->mu) : "",
        s ? csv_number(s->mu_min) : "",
        s ? std::to_string(s->inertia.positive) : "",
        s ? std::to_string(s->inertia.negative) : "",
        s ? std::to_string(s->inertia.zero) : "",
        s ? csv_number(s->s_plus) : "",
        s ? csv_number(s->s_minus) : "",
        std::to_string(r.triangles),
        r.omega ? std::to_string(*r.omega) : "",
        r.chi ? std::to_string(*r.chi) : "",
        violations,
    };
    for (const auto& b : all_bounds()) {
      const auto* e = r.find(b.id);
      row.push_back(e ? num(e->value) : "");
      row.push_back(e ? num(e->slack) : "");
    }
    emit(row);
  }
}

void write_report(const std::vector<GraphRecord>& records, const CampaignSummary& summary, ReportFormat format,
                  const std::filesystem::path& path) {
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write report " + path.string());
    if (format == ReportFormat::Jsonl)
      write_jsonl(out, records);
    else
      write_csv(out, records);
    if (!out) throw InputError("error while writing " + path.string());
  }
  const std::filesystem::path summary_path = path.string() + ".summary.json";
  std::ofstream out(summary_path, std::ios::binary);
  if (!out) throw InputError("cannot write summary " + summary_path.string());
  out << summary_to_json(summary).dump(2) << '\n';
  if (!out) throw InputError("error while writing " + summary_path.string());
}

}  // namespace cliquebound

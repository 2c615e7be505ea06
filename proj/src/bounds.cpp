#include "cliquebound/bounds.hpp"

#include <cmath>
#include <string>

#include "cliquebound/errors.hpp"

namespace cliquebound {
namespace {

using K = BoundKind;
using S = Sense;

constexpr std::array<BoundInfo, kBoundCount> kBounds{{
    {BoundId::Turan, "turan", K::LowerOnOmega, S::Below, false},
    {BoundId::CaroWei, "caro_wei", K::LowerOnOmega, S::Below, false},
    {BoundId::Wilf, "wilf", K::LowerOnOmega, S::Below, false},
    {BoundId::Nikiforov, "nikiforov", K::LowerOnOmega, S::Below, false},
    {BoundId::Conjecture1, "conjecture1", K::LowerOnOmega, S::Below, true},
    {BoundId::EdwardsElphickChi, "edwards_elphick_chi", K::LowerOnChi, S::Below, false},
    {BoundId::AndoLinChi, "ando_lin_chi", K::LowerOnChi, S::Below, false},
    {BoundId::FavaronUpper, "favaron_upper", K::UpperOnOmega, S::Above, false},
    {BoundId::WuElphickChiUpper, "wu_elphick_chi_upper", K::UpperOnChi, S::Above, false},
    {BoundId::StanleyMu, "stanley_mu", K::EigenvalueInequality, S::Above, false},
    {BoundId::WuElphickSplus, "wu_elphick_splus", K::EigenvalueInequality, S::Above, false},
    {BoundId::HongMu, "hong_mu", K::EigenvalueInequality, S::Above, false},
    {BoundId::ElphickSplus, "elphick_splus", K::EigenvalueInequality, S::Above, true},
    {BoundId::TriangleFreeSminus, "triangle_free_sminus", K::EigenvalueInequality, S::Below, false},
    {BoundId::TriangleFreeSplus, "triangle_free_splus", K::EigenvalueInequality, S::Above, false},
    {BoundId::MotzkinStraus, "motzkin_straus", K::WeightInequality, S::Above, false},
}};

constexpr std::array<std::string_view, 6> kKindNames{
    "lower-on-omega", "upper-on-omega", "lower-on-chi", "upper-on-chi", "eigenvalue-inequality", "weight-inequality"};
constexpr std::array<std::string_view, 4> kStatusNames{"evaluated", "undefined-denominator", "no-target", "skipped"};

std::optional<double> as_target(OptionalCount count) {
  if (!count) return std::nullopt;
  return static_cast<double>(*count);
}

}  // namespace

const BoundInfo& info(BoundId id) { return kBounds[static_cast<std::size_t>(id)]; }
const std::array<BoundInfo, kBoundCount>& all_bounds() { return kBounds; }
std::string_view to_string(BoundId id) { return info(id).name; }
std::string_view to_string(BoundKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }
std::string_view to_string(EvalStatus status) { return kStatusNames[static_cast<std::size_t>(status)]; }

std::optional<BoundId> bound_from_string(std::string_view name) {
  for (const auto& b : kBounds)
    if (b.name == name) return b.id;
  return std::nullopt;
}

std::optional<BoundKind> kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<BoundKind>(i);
  return std::nullopt;
}

std::optional<EvalStatus> status_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kStatusNames.size(); ++i)
    if (kStatusNames[i] == name) return static_cast<EvalStatus>(i);
  return std::nullopt;
}

BoundEvaluation make_evaluation(BoundId id, double value, std::optional<double> target, double numeric_tol) {
  BoundEvaluation e;
  e.id = id;
  e.kind = info(id).kind;
  e.value = value;
  e.target = target;
  if (!target) {
    e.status = EvalStatus::NoTarget;
    return e;
  }
  e.slack = info(id).sense == Sense::Below ? *target - value : value - *target;
  e.holds = *e.slack >= -numeric_tol;
  return e;
}

BoundEvaluation undefined_evaluation(BoundId id) {
  BoundEvaluation e;
  e.id = id;
  e.kind = info(id).kind;
  e.status = EvalStatus::UndefinedDenominator;
  e.holds = id != BoundId::Conjecture1;
  return e;
}

BoundEvaluation skipped_evaluation(BoundId id) {
  BoundEvaluation e;
  e.id = id;
  e.kind = info(id).kind;
  e.status = EvalStatus::Skipped;
  return e;
}

BoundEvaluation turan_bound(std::size_t n, double d, OptionalCount omega) {
  if (!(d < static_cast<double>(n))) throw InputError("Turan bound needs d < n");
  const double nd = static_cast<double>(n);
  return make_evaluation(BoundId::Turan, nd / (nd - d), as_target(omega));
}

BoundEvaluation caro_wei_bound(std::span<const std::size_t> degrees, OptionalCount omega) {
  const std::size_t n = degrees.size();
  double sum = 0.0;
  for (std::size_t d : degrees) {
    if (d >= n) throw InputError("Caro-Wei bound needs every degree below n");
    sum += 1.0 / static_cast<double>(n - d);
  }
  return make_evaluation(BoundId::CaroWei, sum, as_target(omega));
}

BoundEvaluation wilf_bound(std::size_t n, double mu, OptionalCount omega) {
  const double nd = static_cast<double>(n);
  if (!(mu < nd)) return undefined_evaluation(BoundId::Wilf);
  return make_evaluation(BoundId::Wilf, nd / (nd - mu), as_target(omega));
}

BoundEvaluation nikiforov_bound(std::size_t m, double mu, OptionalCount omega) {
  const double two_m = 2.0 * static_cast<double>(m);
  if (!(mu * mu < two_m)) return undefined_evaluation(BoundId::Nikiforov);
  return make_evaluation(BoundId::Nikiforov, two_m / (two_m - mu * mu), as_target(omega));
}

BoundEvaluation conjecture1_bound(std::size_t n, double s_plus, OptionalCount omega) {
  const double nd = static_cast<double>(n);
  const double root = std::sqrt(s_plus);
  if (!(root < nd)) return undefined_evaluation(BoundId::Conjecture1);
  return make_evaluation(BoundId::Conjecture1, nd / (nd - root), as_target(omega));
}

std::array<BoundEvaluation, 2> chi_lower_bounds(std::size_t m, double mu, double s_plus, double s_minus,
                                                OptionalCount chi) {
  if (m == 0) return {undefined_evaluation(BoundId::EdwardsElphickChi), undefined_evaluation(BoundId::AndoLinChi)};
  const double two_m = 2.0 * static_cast<double>(m);
  const auto target = as_target(chi);

  BoundEvaluation edwards = mu * mu < two_m
                                ? make_evaluation(BoundId::EdwardsElphickChi, two_m / (two_m - mu * mu), target)
                                : undefined_evaluation(BoundId::EdwardsElphickChi);
  if (!(s_plus < two_m) || !(s_minus > 0.0)) return {edwards, undefined_evaluation(BoundId::AndoLinChi)};

  const double ando = two_m / (two_m - s_plus);
  const double ratio_form = 1.0 + s_plus / s_minus;
  if (std::abs(ando - ratio_form) > kNumericTol)
    throw ConsistencyError("Ando-Lin forms disagree: " + std::to_string(ando) + " vs " + std::to_string(ratio_form));
  return {edwards, make_evaluation(BoundId::AndoLinChi, ando, target)};
}

std::array<BoundEvaluation, 2> upper_bounds(std::size_t m, double mu, double s_plus, OptionalCount omega,
                                            OptionalCount chi) {
  if (m == 0) return {skipped_evaluation(BoundId::FavaronUpper), skipped_evaluation(BoundId::WuElphickChiUpper)};
  const double two_m = 2.0 * static_cast<double>(m);
  const double favaron = two_m / mu;
  const double wu_elphick = two_m / std::sqrt(s_plus);
  if (wu_elphick > favaron + kNumericTol) throw ConsistencyError("2m/sqrt(s+) exceeds 2m/mu");
  return {make_evaluation(BoundId::FavaronUpper, favaron, as_target(omega)),
          make_evaluation(BoundId::WuElphickChiUpper, wu_elphick, as_target(chi))};
}

std::array<BoundEvaluation, 4> eigenvalue_inequality_checks(std::size_t n, std::size_t m, double mu, double s_plus,
                                                            bool no_isolated_vertices, bool connected) {
  const double two_m = 2.0 * static_cast<double>(m);
  const double stanley = (std::sqrt(8.0 * static_cast<double>(m) + 1.0) - 1.0) / 2.0;
  const double hong = two_m - static_cast<double>(n) + 1.0;
  std::array<BoundEvaluation, 4> out{
      make_evaluation(BoundId::StanleyMu, stanley, mu),
      make_evaluation(BoundId::WuElphickSplus, stanley, std::sqrt(s_plus)),
      skipped_evaluation(BoundId::HongMu),
      skipped_evaluation(BoundId::ElphickSplus),
  };
  if (no_isolated_vertices) out[2] = make_evaluation(BoundId::HongMu, hong, mu * mu);
  if (no_isolated_vertices && connected) out[3] = make_evaluation(BoundId::ElphickSplus, hong, s_plus);
  return out;
}

std::array<BoundEvaluation, 2> triangle_free_checks(std::size_t n, double mu, double s_plus, double s_minus) {
  return {make_evaluation(BoundId::TriangleFreeSminus, mu * mu, s_minus),
          make_evaluation(BoundId::TriangleFreeSplus, static_cast<double>(n) / 2.0, std::sqrt(s_plus))};
}

double motzkin_straus_value(const Graph& g, std::span<const double> weights) {
  if (weights.size() != g.n()) throw InputError("weight vector length must equal n");
  double total = 0.0;
  for (double p : weights) {
    if (!(p >= 0.0)) throw InputError("weights must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InputError("weights must sum to 1");
  double sum = 0.0;
  for (auto [u, v] : g.edges()) sum += weights[u] * weights[v];
  return sum;
}

BoundEvaluation motzkin_straus_bound(const Graph& g, std::span<const double> weights, OptionalCount omega) {
  const double form = motzkin_straus_value(g, weights);
  if (!omega) {
    BoundEvaluation e = skipped_evaluation(BoundId::MotzkinStraus);
    e.status = EvalStatus::NoTarget;
    e.target = form;
    return e;
  }
  const double w = static_cast<double>(*omega);
  return make_evaluation(BoundId::MotzkinStraus, (w - 1.0) / (2.0 * w), form);
}

std::vector<BoundEvaluation> evaluate_bounds(const Graph& g, const BoundInputs& in) {
  std::vector<BoundEvaluation> out;
  out.reserve(kBoundCount);
  out.push_back(turan_bound(in.n, in.average_degree, in.omega));
  out.push_back(caro_wei_bound(in.degrees, in.omega));
  out.push_back(wilf_bound(in.n, in.mu, in.omega));
  out.push_back(nikiforov_bound(in.m, in.mu, in.omega));
  out.push_back(conjecture1_bound(in.n, in.s_plus, in.omega));
  for (auto& e : chi_lower_bounds(in.m, in.mu, in.s_plus, in.s_minus, in.chi)) out.push_back(e);
  for (auto& e : upper_bounds(in.m, in.mu, in.s_plus, in.omega, in.chi)) out.push_back(e);
  for (auto& e : eigenvalue_inequality_checks(in.n, in.m, in.mu, in.s_plus, in.isolated_vertices == 0, in.connected))
    out.push_back(e);
  if (in.triangle_free) {
    for (auto& e : triangle_free_checks(in.n, in.mu, in.s_plus, in.s_minus)) out.push_back(e);
  } else {
    out.push_back(skipped_evaluation(BoundId::TriangleFreeSminus));
    out.push_back(skipped_evaluation(BoundId::TriangleFreeSplus));
  }
  const std::vector<double> uniform(in.n, 1.0 / static_cast<double>(in.n));
  out.push_back(motzkin_straus_bound(g, uniform, in.omega));
  return out;
}

}  // namespace cliquebound

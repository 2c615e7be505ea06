#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cliquebound/graph.hpp"

namespace cliquebound {

inline constexpr double kNumericTol = 1e-6;

// Stable public identifiers; to_string() gives the names used in reports
// and on the command line.
enum class BoundId {
  Turan,
  CaroWei,
  Wilf,
  Nikiforov,
  Conjecture1,
  EdwardsElphickChi,
  AndoLinChi,
  FavaronUpper,
  WuElphickChiUpper,
  StanleyMu,
  WuElphickSplus,
  HongMu,
  ElphickSplus,
  TriangleFreeSminus,
  TriangleFreeSplus,
  MotzkinStraus,
};

inline constexpr std::size_t kBoundCount = 16;

enum class BoundKind {
  LowerOnOmega,
  UpperOnOmega,
  LowerOnChi,
  UpperOnChi,
  EigenvalueInequality,
  WeightInequality,
};

enum class EvalStatus {
  Evaluated,
  UndefinedDenominator,
  NoTarget,  // omega or chi not available (aborted or not requested)
  Skipped,   // precondition of the inequality not met by this graph
};

// A bound either sits below its target (value <= target) or above it.
enum class Sense { Below, Above };

struct BoundInfo {
  BoundId id;
  std::string_view name;
  BoundKind kind;
  Sense sense;
  bool falsifiable;  // conjectured or "almost always" statements
};

const BoundInfo& info(BoundId id);
const std::array<BoundInfo, kBoundCount>& all_bounds();
std::string_view to_string(BoundId id);
std::string_view to_string(BoundKind kind);
std::string_view to_string(EvalStatus status);
std::optional<BoundId> bound_from_string(std::string_view name);
std::optional<BoundKind> kind_from_string(std::string_view name);
std::optional<EvalStatus> status_from_string(std::string_view name);

// One inequality instance. value is the bound expression, target the
// quantity it bounds; slack = target - value for Sense::Below and
// value - target for Sense::Above, so slack >= 0 means the inequality holds.
struct BoundEvaluation {
  BoundId id = BoundId::Turan;
  BoundKind kind = BoundKind::LowerOnOmega;
  EvalStatus status = EvalStatus::Evaluated;
  std::optional<double> value;
  std::optional<double> target;
  std::optional<double> slack;
  bool holds = true;

  bool violated() const noexcept { return !holds; }
  bool tight(double tol = kNumericTol) const noexcept { return slack && std::abs(*slack) <= tol; }

  friend bool operator==(const BoundEvaluation&, const BoundEvaluation&) = default;
};

// Builds an evaluation, deriving slack and holds from id's sense.
BoundEvaluation make_evaluation(BoundId id, double value, std::optional<double> target,
                                double numeric_tol = kNumericTol);
// Undefined denominators are vacuous except for conjecture1, where they are
// an anomaly and count as a failure.
BoundEvaluation undefined_evaluation(BoundId id);
BoundEvaluation skipped_evaluation(BoundId id);

using OptionalCount = std::optional<std::size_t>;

BoundEvaluation turan_bound(std::size_t n, double d, OptionalCount omega = {});
BoundEvaluation caro_wei_bound(std::span<const std::size_t> degrees, OptionalCount omega = {});
BoundEvaluation wilf_bound(std::size_t n, double mu, OptionalCount omega = {});
BoundEvaluation nikiforov_bound(std::size_t m, double mu, OptionalCount omega = {});
BoundEvaluation conjecture1_bound(std::size_t n, double s_plus, OptionalCount omega = {});

// Edwards-Elphick 2m/(2m - mu^2) and Ando-Lin 2m/(2m - s+) on chi. Throws
// ConsistencyError if 2m/(2m - s+) and 1 + s+/s- disagree.
std::array<BoundEvaluation, 2> chi_lower_bounds(std::size_t m, double mu, double s_plus, double s_minus,
                                                OptionalCount chi = {});

// Favaron 2m/mu on omega and Wu-Elphick 2m/sqrt(s+) on chi.
std::array<BoundEvaluation, 2> upper_bounds(std::size_t m, double mu, double s_plus, OptionalCount omega = {},
                                            OptionalCount chi = {});

// Stanley, Wu-Elphick (sqrt s+), Hong and Elphick et al. Hong-type checks
// are skipped unless the graph has no isolated vertices; the Elphick s+
// statistic additionally needs a connected graph.
std::array<BoundEvaluation, 4> eigenvalue_inequality_checks(std::size_t n, std::size_t m, double mu, double s_plus,
                                                            bool no_isolated_vertices = true,
                                                            bool connected = true);

// s- >= mu^2 and sqrt(s+) <= n/2, valid for triangle-free graphs.
std::array<BoundEvaluation, 2> triangle_free_checks(std::size_t n, double mu, double s_plus, double s_minus);

// Sum over edges of p_i p_j. Throws InputError unless weights is a
// probability vector of length n.
double motzkin_straus_value(const Graph& g, std::span<const double> weights);
BoundEvaluation motzkin_straus_bound(const Graph& g, std::span<const double> weights, OptionalCount omega = {});

// Everything a graph's bound evaluations consume.
struct BoundInputs {
  std::size_t n = 0;
  std::size_t m = 0;
  double average_degree = 0.0;
  std::vector<std::size_t> degrees;
  double mu = 0.0;
  double s_plus = 0.0;
  double s_minus = 0.0;
  OptionalCount omega;
  OptionalCount chi;
  bool triangle_free = false;
  bool connected = false;
  std::size_t isolated_vertices = 0;
};

// All evaluations for one graph in BoundId order. Motzkin-Straus uses the
// uniform distribution on all vertices.
std::vector<BoundEvaluation> evaluate_bounds(const Graph& g, const BoundInputs& in);

}  // namespace cliquebound

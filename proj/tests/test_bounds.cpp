#include <doctest.h>

#include <cmath>
#include <random>

#include "cliquebound/bounds.hpp"
#include "cliquebound/combinatorics.hpp"
#include "cliquebound/errors.hpp"
#include "cliquebound/spectral.hpp"
#include "oracles.hpp"

using namespace cliquebound;

namespace {

const double kC7SPlus = oracle::cycle_s_plus(7);

}  // namespace

TEST_CASE("bound identifiers") {
  for (const auto& b : all_bounds()) {
    CHECK(bound_from_string(b.name) == b.id);
    CHECK(info(b.id).name == b.name);
  }
  CHECK(to_string(BoundId::Conjecture1) == "conjecture1");
  CHECK(info(BoundId::Conjecture1).falsifiable);
  CHECK(info(BoundId::ElphickSplus).falsifiable);
  CHECK_FALSE(info(BoundId::Wilf).falsifiable);
  CHECK_FALSE(bound_from_string("nope"));
  CHECK(kind_from_string("lower-on-chi") == BoundKind::LowerOnChi);
  CHECK(status_from_string("skipped") == EvalStatus::Skipped);
}

TEST_CASE("slack and holds follow the bound's sense") {
  const auto lower = make_evaluation(BoundId::Wilf, 2.5, 2.0);
  CHECK(*lower.slack == doctest::Approx(-0.5));
  CHECK_FALSE(lower.holds);
  const auto within_tol = make_evaluation(BoundId::Wilf, 2.0 + 5e-7, 2.0);
  CHECK(within_tol.holds);
  CHECK(within_tol.tight());
  const auto upper = make_evaluation(BoundId::FavaronUpper, 3.0, 2.0);
  CHECK(*upper.slack == doctest::Approx(1.0));
  CHECK(upper.holds);
  const auto no_target = make_evaluation(BoundId::Turan, 1.0, std::nullopt);
  CHECK(no_target.status == EvalStatus::NoTarget);
  CHECK(no_target.holds);
  CHECK_FALSE(no_target.slack);
}

TEST_CASE("Turan") {
  CHECK(*turan_bound(6, 3.0, 2).value == doctest::Approx(2.0));
  CHECK(turan_bound(6, 3.0, 2).tight());
  CHECK(*turan_bound(10, 3.0).value == doctest::Approx(10.0 / 7.0));
  CHECK(*turan_bound(5, 4.0, 5).value == doctest::Approx(5.0));
  CHECK(turan_bound(5, 4.0).kind == BoundKind::LowerOnOmega);
  CHECK_THROWS_AS(turan_bound(3, 3.0), InputError);
}

TEST_CASE("Caro-Wei") {
  const std::vector<std::size_t> star{3, 1, 1, 1};
  CHECK(*caro_wei_bound(star, 2).value == doctest::Approx(2.0));
  CHECK(caro_wei_bound(star, 2).holds);
  CHECK(*caro_wei_bound(std::vector<std::size_t>(5, 4)).value == doctest::Approx(5.0));
  CHECK(*caro_wei_bound(std::vector<std::size_t>(5, 2)).value == doctest::Approx(5.0 / 3.0));
  CHECK_THROWS_AS(caro_wei_bound(std::vector<std::size_t>{2, 1}), InputError);
}

TEST_CASE("Wilf and Nikiforov") {
  CHECK(*wilf_bound(10, 3.0).value == doctest::Approx(10.0 / 7.0));
  CHECK(*wilf_bound(6, 3.0).value == doctest::Approx(2.0));
  CHECK(*wilf_bound(7, 2.0).value == doctest::Approx(1.4));

  CHECK(*nikiforov_bound(9, 3.0).value == doctest::Approx(2.0));
  CHECK(*nikiforov_bound(5, 2.0).value == doctest::Approx(10.0 / 6.0));
  CHECK(*nikiforov_bound(15, 3.0).value == doctest::Approx(10.0 / 7.0));
  const auto undefined = nikiforov_bound(0, 0.0);
  CHECK(undefined.status == EvalStatus::UndefinedDenominator);
  CHECK(undefined.holds);
}

TEST_CASE("Conjecture 1") {
  const auto k33 = conjecture1_bound(6, 9.0, 2);
  CHECK(*k33.value == doctest::Approx(2.0));
  CHECK(k33.tight());
  const auto petersen = conjecture1_bound(10, 14.0, 2);
  CHECK(*petersen.value == doctest::Approx(1.5978671379969698).epsilon(1e-12));
  CHECK(petersen.holds);
  const auto c7 = conjecture1_bound(7, kC7SPlus, 2);
  CHECK(*c7.value == doctest::Approx(1.6153011006352485).epsilon(1e-12));
  CHECK(*c7.value == doctest::Approx(1.61530).epsilon(1e-5));
  CHECK(*conjecture1_bound(3, 0.0, 1).value == 1.0);

  const auto anomaly = conjecture1_bound(3, 9.0, 3);
  CHECK(anomaly.status == EvalStatus::UndefinedDenominator);
  CHECK_FALSE(anomaly.holds);
}

TEST_CASE("chromatic lower bounds") {
  const auto k5 = chi_lower_bounds(10, 4.0, 16.0, 4.0, 5);
  CHECK(*k5[0].value == doctest::Approx(5.0));
  CHECK(*k5[1].value == doctest::Approx(5.0));
  CHECK(k5[1].tight());

  const auto c7 = chi_lower_bounds(7, 2.0, kC7SPlus, 14.0 - kC7SPlus, 3);
  CHECK(*c7[1].value == doctest::Approx(2.031905639579742).epsilon(1e-12));
  CHECK(c7[1].holds);
  CHECK(*c7[1].value > 2.0);  // exceeds omega(C7) = 2

  const auto petersen = chi_lower_bounds(15, 3.0, 14.0, 16.0, 3);
  CHECK(*petersen[1].value == doctest::Approx(1.875));
  CHECK(*petersen[0].value == doctest::Approx(30.0 / 21.0));

  const auto empty = chi_lower_bounds(0, 0.0, 0.0, 0.0, 1);
  CHECK(empty[0].status == EvalStatus::UndefinedDenominator);
  CHECK(empty[1].status == EvalStatus::UndefinedDenominator);

  CHECK_THROWS_AS(chi_lower_bounds(10, 4.0, 16.0, 3.0, 5), ConsistencyError);
}

TEST_CASE("upper bounds") {
  const auto k5 = upper_bounds(10, 4.0, 16.0, 5, 5);
  CHECK(*k5[0].value == doctest::Approx(5.0));
  CHECK(*k5[1].value == doctest::Approx(5.0));
  const auto petersen = upper_bounds(15, 3.0, 14.0, 2, 3);
  CHECK(*petersen[0].value == doctest::Approx(10.0));
  CHECK(*petersen[1].value == doctest::Approx(8.017837257372731));
  const auto k33 = upper_bounds(9, 3.0, 9.0, 2, 2);
  CHECK(*k33[0].value == doctest::Approx(6.0));
  CHECK(*k33[1].value == doctest::Approx(6.0));
  CHECK(k33[1].holds);
  CHECK(upper_bounds(0, 0.0, 0.0)[0].status == EvalStatus::Skipped);
  CHECK_THROWS_AS(upper_bounds(10, 4.0, 9.0), ConsistencyError);
}

TEST_CASE("eigenvalue inequalities") {
  const auto k5 = eigenvalue_inequality_checks(5, 10, 4.0, 16.0);
  CHECK(std::abs(*k5[0].value - 4.0) <= 1e-9);
  CHECK(k5[0].tight());
  CHECK(std::abs(*k5[2].value - 16.0) <= 1e-9);
  CHECK(k5[2].tight());

  const auto star = eigenvalue_inequality_checks(4, 3, std::sqrt(3.0), 3.0);
  CHECK(*star[0].value == doctest::Approx(2.0));
  CHECK(star[0].holds);
  CHECK(*star[0].slack == doctest::Approx(2.0 - std::sqrt(3.0)));

  const auto petersen = eigenvalue_inequality_checks(10, 15, 3.0, 14.0);
  CHECK(*petersen[1].value == doctest::Approx(5.0));  // (sqrt(8*15+1)-1)/2
  CHECK(*petersen[1].target == doctest::Approx(3.7416573867739413));
  CHECK(petersen[3].holds);

  const auto isolated = eigenvalue_inequality_checks(5, 1, 1.0, 1.0, false, false);
  CHECK(isolated[2].status == EvalStatus::Skipped);
  CHECK(isolated[3].status == EvalStatus::Skipped);
  CHECK(isolated[0].status == EvalStatus::Evaluated);
  // 2K2 has no isolated vertices but is disconnected: Hong applies, Elphick does not.
  const auto two_k2 = eigenvalue_inequality_checks(4, 2, 1.0, 2.0, true, false);
  CHECK(two_k2[2].status == EvalStatus::Evaluated);
  CHECK(two_k2[3].status == EvalStatus::Skipped);
}

TEST_CASE("triangle-free checks") {
  const auto petersen = triangle_free_checks(10, 3.0, 14.0, 16.0);
  CHECK(petersen[0].holds);
  CHECK(petersen[1].holds);
  const auto k33 = triangle_free_checks(6, 3.0, 9.0, 9.0);
  CHECK(k33[0].tight());
  CHECK(k33[1].tight());
}

TEST_CASE("Motzkin-Straus") {
  const std::vector<double> third(3, 1.0 / 3.0);
  CHECK(motzkin_straus_value(complete_graph(3), third) == doctest::Approx(1.0 / 3.0));
  CHECK(motzkin_straus_bound(complete_graph(3), third, 3).tight());

  const std::vector<double> fifth(5, 0.2);
  CHECK(motzkin_straus_value(cycle_graph(5), fifth) == doctest::Approx(0.2));
  CHECK(motzkin_straus_bound(cycle_graph(5), fifth, 2).holds);

  const Graph petersen = kneser_graph(5, 2);
  const auto [u, v] = petersen.edges().front();
  std::vector<double> on_edge(10, 0.0);
  on_edge[u] = on_edge[v] = 0.5;
  CHECK(motzkin_straus_value(petersen, on_edge) == doctest::Approx(0.25));
  CHECK(motzkin_straus_bound(petersen, on_edge, 2).tight());

  CHECK_THROWS_AS(motzkin_straus_value(complete_graph(3), std::vector<double>{0.5, 0.5}), InputError);
  CHECK_THROWS_AS(motzkin_straus_value(complete_graph(2), std::vector<double>{0.7, 0.7}), InputError);
  CHECK_THROWS_AS(motzkin_straus_value(complete_graph(2), std::vector<double>{1.5, -0.5}), InputError);
}

TEST_CASE("bound orderings on random graphs") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<std::size_t> size(2, 30);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, size(rng), density(rng));
    if (g.m() == 0) continue;
    const Spectrum s = spectrum_of(g);
    const DegreeStats ds = degree_stats(g);
    const double turan = *turan_bound(g.n(), ds.average).value;
    const double caro = *caro_wei_bound(ds.degrees).value;
    const double wilf = *wilf_bound(g.n(), s.mu).value;
    const double nik = *nikiforov_bound(g.m(), s.mu).value;
    const double c1 = *conjecture1_bound(g.n(), s.s_plus).value;
    const double ando = *chi_lower_bounds(g.m(), s.mu, s.s_plus, s.s_minus)[1].value;
    CHECK(turan <= wilf + kNumericTol);
    CHECK(wilf <= nik + kNumericTol);
    CHECK(turan <= caro + kNumericTol);
    CHECK(wilf <= c1 + kNumericTol);
    CHECK(c1 <= ando + kNumericTol);
  }
}

TEST_CASE("regular graphs collapse Turan, Wilf and Nikiforov") {
  for (const Graph& g : {kneser_graph(5, 2), kneser_graph(7, 2), cycle_graph(9),
                         complete_multipartite(std::vector<std::size_t>{2, 2, 2})}) {
    const Spectrum s = spectrum_of(g);
    const double d = degree_stats(g).average;
    const double nd = g.n() / (g.n() - d);
    CHECK(std::abs(*turan_bound(g.n(), d).value - nd) <= kNumericTol);
    CHECK(std::abs(*wilf_bound(g.n(), s.mu).value - nd) <= kNumericTol);
    CHECK(std::abs(*nikiforov_bound(g.m(), s.mu).value - nd) <= kNumericTol);
  }
}

TEST_CASE("evaluate_bounds covers every id in order") {
  const Graph g = kneser_graph(5, 2);
  const Spectrum s = spectrum_of(g);
  BoundInputs in;
  in.n = g.n();
  in.m = g.m();
  const DegreeStats ds = degree_stats(g);
  in.average_degree = ds.average;
  in.degrees = ds.degrees;
  in.mu = s.mu;
  in.s_plus = s.s_plus;
  in.s_minus = s.s_minus;
  in.omega = 2;
  in.triangle_free = true;
  in.connected = true;
  const auto evals = evaluate_bounds(g, in);
  REQUIRE(evals.size() == kBoundCount);
  for (std::size_t i = 0; i < kBoundCount; ++i) CHECK(static_cast<std::size_t>(evals[i].id) == i);
  CHECK(evals[static_cast<std::size_t>(BoundId::AndoLinChi)].status == EvalStatus::NoTarget);
  CHECK(evals[static_cast<std::size_t>(BoundId::MotzkinStraus)].holds);
  for (const auto& e : evals) CHECK(e.holds);
}

#include <doctest.h>

#include <random>

#include "cliquebound/combinatorics.hpp"
#include "cliquebound/errors.hpp"
#include "oracles.hpp"

using namespace cliquebound;

TEST_CASE("clique number examples") {
  CHECK(clique_number(complete_graph(5)).omega == 5);
  CHECK(clique_number(cycle_graph(5)).omega == 2);
  const CliqueResult petersen = clique_number(kneser_graph(5, 2));
  CHECK(petersen.exact());
  CHECK(petersen.omega == 2);
  CHECK(is_clique(kneser_graph(5, 2), petersen.witness));
  CHECK(clique_number(empty_graph(4)).omega == 1);
  CHECK(clique_number(kneser_graph(12, 2)).omega == 6);
  CHECK_THROWS_AS(clique_number(Graph{}), InputError);
}

TEST_CASE("chromatic number examples") {
  const Graph k33 = complete_multipartite(std::vector<std::size_t>{3, 3});
  CHECK(chromatic_number(k33).chi == 2);
  CHECK(chromatic_number(cycle_graph(5)).chi == 3);
  const Graph petersen = kneser_graph(5, 2);
  const ColoringResult c = chromatic_number(petersen);
  CHECK(c.exact());
  CHECK(c.chi == 3);
  CHECK(is_proper_coloring(petersen, c.coloring));
  CHECK(oracle::chromatic_number(petersen) == 3);
  CHECK(chromatic_number(empty_graph(3)).chi == 1);
  // KG(p,2) has chromatic number p - 2.
  CHECK(chromatic_number(kneser_graph(7, 2)).chi == 5);
  CHECK_THROWS_AS(chromatic_number(Graph{}), InputError);
}

TEST_CASE("weakly perfect predicate") {
  CHECK(is_weakly_perfect(complete_graph(5)) == true);
  CHECK(is_weakly_perfect(cycle_graph(5)) == false);
  CHECK(is_weakly_perfect(complete_multipartite(std::vector<std::size_t>{3, 3})) == true);

  SolveBudget tiny;
  tiny.node_limit = 1;
  CHECK_FALSE(is_weakly_perfect(gnp_graph(40, 0.5, 1), tiny).has_value());
}

TEST_CASE("exact solvers agree with brute force on every graph up to 6 vertices") {
  for (std::size_t n = 1; n <= 6; ++n) {
    LabeledGraphStream stream(n);
    Graph g;
    std::uint64_t mask;
    while (stream.next(g, mask)) {
      const CliqueResult clique = clique_number(g);
      REQUIRE(clique.omega == oracle::clique_number(g));
      REQUIRE(is_clique(g, clique.witness));
      REQUIRE(clique.witness.size() == clique.omega);
      const ColoringResult coloring = chromatic_number(g);
      REQUIRE(coloring.chi == oracle::chromatic_number(g));
      REQUIRE(is_proper_coloring(g, coloring.coloring));
      REQUIRE(clique.omega <= coloring.chi);
      REQUIRE((clique.omega == n) == g.is_complete());
    }
  }
}

TEST_CASE("exact solvers agree with brute force on random graphs with 8 vertices") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, 8, density(rng));
    REQUIRE(clique_number(g).omega == oracle::clique_number(g));
    REQUIRE(chromatic_number(g).chi == oracle::chromatic_number(g));
  }
}

TEST_CASE("adding an edge never decreases omega or chi") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<Vertex> vertex(0, 11);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(rng, 12, 0.35);
    Vertex u = vertex(rng), v = vertex(rng);
    if (u == v) continue;
    const Graph h = g.with_edge(u, v);
    CHECK(clique_number(h).omega >= clique_number(g).omega);
    CHECK(chromatic_number(h).chi >= chromatic_number(g).chi);
  }
}

TEST_CASE("budget exhaustion aborts instead of guessing") {
  SolveBudget tiny;
  tiny.node_limit = 3;
  const Graph g = gnp_graph(80, 0.5, 17);
  const CliqueResult clique = clique_number(g, tiny);
  CHECK(clique.status == SolveStatus::Aborted);
  CHECK_FALSE(clique.exact());
  const ColoringResult coloring = chromatic_number(g, tiny);
  CHECK(coloring.status == SolveStatus::Aborted);

  SolveBudget timed;
  timed.time_limit = std::chrono::milliseconds(1);
  const CliqueResult quick = clique_number(gnp_graph(30, 0.3, 1), timed);
  CHECK(quick.exact());
}

TEST_CASE("clique solver on larger graphs") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Graph g = gnp_graph(100, 0.5, seed);
    const CliqueResult r = clique_number(g);
    REQUIRE(r.exact());
    CHECK(is_clique(g, r.witness));
    CHECK(r.omega >= 8);
    CHECK(r.omega <= 12);
  }
  // Planted clique across word boundaries.
  GraphBuilder b(150);
  const std::vector<Vertex> planted{3, 40, 63, 64, 65, 100, 127, 128, 149};
  for (std::size_t i = 0; i < planted.size(); ++i)
    for (std::size_t j = i + 1; j < planted.size(); ++j) b.add_edge(planted[i], planted[j]);
  const CliqueResult r = clique_number(std::move(b).build());
  CHECK(r.omega == planted.size());
  CHECK(r.witness == planted);
}

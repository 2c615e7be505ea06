#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cliquebound/graph.hpp"

namespace cliquebound {

// Limits for the exact solvers. Running out yields SolveStatus::Aborted,
// never an approximate answer.
struct SolveBudget {
  std::uint64_t node_limit = 1'000'000'000;
  std::chrono::milliseconds time_limit{0};  // 0 = no time limit
};

enum class SolveStatus { Exact, Aborted };

struct CliqueResult {
  SolveStatus status = SolveStatus::Aborted;
  std::size_t omega = 0;
  std::vector<Vertex> witness;  // sorted vertex ids of a maximum clique
  std::uint64_t nodes = 0;

  bool exact() const noexcept { return status == SolveStatus::Exact; }
};

struct ColoringResult {
  SolveStatus status = SolveStatus::Aborted;
  std::size_t chi = 0;
  std::vector<std::uint32_t> coloring;  // color of each vertex, 0..chi-1
  std::uint64_t nodes = 0;

  bool exact() const noexcept { return status == SolveStatus::Exact; }
};

struct CombinatorialInvariants {
  std::size_t omega = 0;
  std::optional<std::size_t> chi;
  std::uint64_t triangles = 0;
  bool triangle_free = true;
  std::optional<bool> weakly_perfect;
};

// Branch and bound with greedy colouring bounds over a degeneracy ordering.
CliqueResult clique_number(const Graph& g, const SolveBudget& budget = {});

// DSATUR backtracking, tried for k = omega, omega+1, ... below a greedy
// DSATUR upper bound. The maximum clique is pre-coloured.
ColoringResult chromatic_number(const Graph& g, const SolveBudget& budget = {});

// Nullopt when either solve was aborted.
std::optional<bool> is_weakly_perfect(const CliqueResult& clique, const ColoringResult& coloring);
std::optional<bool> is_weakly_perfect(const Graph& g, const SolveBudget& budget = {});

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices);
bool is_proper_coloring(const Graph& g, const std::vector<std::uint32_t>& coloring);

}  // namespace cliquebound

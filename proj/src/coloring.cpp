#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "cliquebound/combinatorics.hpp"
#include "cliquebound/errors.hpp"

namespace cliquebound {
namespace {

constexpr std::uint32_t kUncolored = UINT32_MAX;

// Colouring state shared by the greedy pass and the exact search. Keeps,
// for every vertex, how many neighbours hold each colour and the number of
// distinct neighbour colours (its saturation).
class DsaturState {
 public:
  DsaturState(const Graph& g, std::size_t max_colors)
      : n_(g.n()),
        max_colors_(max_colors),
        color_(g.n(), kUncolored),
        counts_(g.n() * max_colors, 0),
        saturation_(g.n(), 0),
        free_degree_(g.n(), 0) {
    neighbors_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      neighbors_.push_back(g.neighbors(v));
      free_degree_[v] = neighbors_.back().size();
    }
  }

  std::size_t uncolored() const { return n_ - colored_; }
  std::uint32_t color(Vertex v) const { return color_[v]; }
  bool allowed(Vertex v, std::uint32_t c) const { return counts_[v * max_colors_ + c] == 0; }

  // Uncoloured vertex with maximum saturation, then maximum degree among
  // uncoloured vertices, then smallest index.
  Vertex select() const {
    Vertex best = kUncolored;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != kUncolored) continue;
      if (best == kUncolored || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && free_degree_[v] > free_degree_[best]))
        best = v;
    }
    return best;
  }

  void assign(Vertex v, std::uint32_t c) {
    color_[v] = c;
    ++colored_;
    for (Vertex w : neighbors_[v]) {
      if (counts_[w * max_colors_ + c]++ == 0) ++saturation_[w];
      --free_degree_[w];
    }
  }

  void unassign(Vertex v) {
    const std::uint32_t c = color_[v];
    color_[v] = kUncolored;
    --colored_;
    for (Vertex w : neighbors_[v]) {
      if (--counts_[w * max_colors_ + c] == 0) --saturation_[w];
      ++free_degree_[w];
    }
  }

  std::vector<std::uint32_t> coloring() const { return color_; }

 private:
  std::size_t n_;
  std::size_t max_colors_;
  std::size_t colored_ = 0;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> saturation_;
  std::vector<std::size_t> free_degree_;
};

class KColoringSearch {
 public:
  KColoringSearch(const Graph& g, std::size_t k, const std::vector<Vertex>& clique, std::uint64_t& nodes,
                  const SolveBudget& budget, std::chrono::steady_clock::time_point start)
      : state_(g, k), k_(k), nodes_(nodes), budget_(budget), start_(start) {
    for (std::uint32_t c = 0; c < clique.size(); ++c) state_.assign(clique[c], c);
    used_ = clique.size();
  }

  // True with a colouring found, false when none exists; aborted() tells
  // whether the answer is trustworthy.
  bool run() { return search(); }
  bool aborted() const { return aborted_; }
  std::vector<std::uint32_t> coloring() const { return state_.coloring(); }

 private:
  bool search() {
    if (state_.uncolored() == 0) return true;
    if (++nodes_ > budget_.node_limit ||
        (budget_.time_limit.count() > 0 && (nodes_ & 1023) == 0 &&
         std::chrono::steady_clock::now() - start_ > budget_.time_limit)) {
      aborted_ = true;
      return false;
    }
    const Vertex v = state_.select();
    const std::size_t limit = std::min(k_, used_ + 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      if (!state_.allowed(v, c)) continue;
      const std::size_t saved_used = used_;
      used_ = std::max<std::size_t>(used_, c + 1);
      state_.assign(v, c);
      if (search()) return true;
      state_.unassign(v);
      used_ = saved_used;
      if (aborted_) return false;
    }
    return false;
  }

  DsaturState state_;
  std::size_t k_;
  std::size_t used_ = 0;
  std::uint64_t& nodes_;
  const SolveBudget& budget_;
  std::chrono::steady_clock::time_point start_;
  bool aborted_ = false;
};

std::vector<std::uint32_t> greedy_dsatur(const Graph& g) {
  DsaturState state(g, g.n());
  while (state.uncolored() > 0) {
    const Vertex v = state.select();
    std::uint32_t c = 0;
    while (!state.allowed(v, c)) ++c;
    state.assign(v, c);
  }
  return state.coloring();
}

std::size_t color_count(const std::vector<std::uint32_t>& coloring) {
  return coloring.empty() ? 0 : *std::max_element(coloring.begin(), coloring.end()) + 1;
}

}  // namespace

bool is_proper_coloring(const Graph& g, const std::vector<std::uint32_t>& coloring) {
  if (coloring.size() != g.n()) return false;
  for (auto [u, v] : g.edges())
    if (coloring[u] == coloring[v]) return false;
  return true;
}

ColoringResult chromatic_number(const Graph& g, const SolveBudget& budget) {
  if (g.n() == 0) throw InputError("chromatic number of a graph with no vertices");
  const auto start = std::chrono::steady_clock::now();

  ColoringResult result;
  const CliqueResult clique = clique_number(g, budget);
  result.nodes = clique.nodes;
  if (!clique.exact()) return result;

  result.coloring = greedy_dsatur(g);
  result.chi = color_count(result.coloring);
  for (std::size_t k = clique.omega; k < result.chi; ++k) {
    KColoringSearch search(g, k, clique.witness, result.nodes, budget, start);
    const bool found = search.run();
    if (search.aborted()) return result;  // status stays Aborted
    if (found) {
      result.coloring = search.coloring();
      result.chi = k;
      break;
    }
  }
  result.status = SolveStatus::Exact;
  if (!is_proper_coloring(g, result.coloring) || color_count(result.coloring) != result.chi)
    throw ConsistencyError("chromatic witness is not a proper colouring");
  return result;
}

std::optional<bool> is_weakly_perfect(const CliqueResult& clique, const ColoringResult& coloring) {
  if (!clique.exact() || !coloring.exact()) return std::nullopt;
  return clique.omega == coloring.chi;
}

std::optional<bool> is_weakly_perfect(const Graph& g, const SolveBudget& budget) {
  return is_weakly_perfect(clique_number(g, budget), chromatic_number(g, budget));
}

}  // namespace cliquebound

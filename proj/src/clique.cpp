#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <vector>

#include "cliquebound/combinatorics.hpp"
#include "cliquebound/errors.hpp"

namespace cliquebound {
namespace {

using Word = std::uint64_t;

// Vertices ordered so that the last vertex removed by a min-degree peeling
// comes first. Ties go to the smaller index.
std::vector<Vertex> degeneracy_order(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> order(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    std::size_t best_deg = SIZE_MAX;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && deg[v] < best_deg) best = v, best_deg = deg[v];
    removed[best] = 1;
    order[n - 1 - step] = best;
    for (Vertex w = 0; w < n; ++w)
      if (!removed[w] && g.adjacent(best, w)) --deg[w];
  }
  return order;
}

class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, const SolveBudget& budget)
      : n_(g.n()), words_((g.n() + 63) / 64), budget_(budget), order_(degeneracy_order(g)) {
    adj_.assign(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && g.adjacent(order_[i], order_[j])) adj_[i * words_ + j / 64] |= Word{1} << (j % 64);
    start_ = std::chrono::steady_clock::now();
  }

  CliqueResult run() {
    CliqueResult result;
    if (n_ > 0) {
      std::vector<Word> all(words_, 0);
      for (std::size_t v = 0; v < n_; ++v) all[v / 64] |= Word{1} << (v % 64);
      expand(all);
    }
    result.nodes = nodes_;
    result.status = aborted_ ? SolveStatus::Aborted : SolveStatus::Exact;
    result.omega = best_.size();
    for (auto v : best_) result.witness.push_back(order_[v]);
    std::sort(result.witness.begin(), result.witness.end());
    return result;
  }

 private:
  const Word* row(std::size_t v) const { return adj_.data() + v * words_; }

  bool out_of_budget() {
    if (++nodes_ > budget_.node_limit) return true;
    if (budget_.time_limit.count() > 0 && (nodes_ & 1023) == 0)
      return std::chrono::steady_clock::now() - start_ > budget_.time_limit;
    return false;
  }

  // Greedy sequential colouring of p in index order. Fills vertices/colors
  // with colour classes in nondecreasing colour order.
  void color_sort(const std::vector<Word>& p, std::vector<std::uint32_t>& vertices,
                  std::vector<std::uint32_t>& colors) const {
    vertices.clear();
    colors.clear();
    std::vector<Word> uncolored = p;
    std::vector<Word> candidates(words_);
    std::uint32_t color = 0;
    bool remaining = std::any_of(uncolored.begin(), uncolored.end(), [](Word w) { return w != 0; });
    while (remaining) {
      ++color;
      candidates = uncolored;
      for (std::size_t k = 0; k < words_; ++k) {
        while (candidates[k]) {
          const auto v = static_cast<std::uint32_t>(k * 64 + std::countr_zero(candidates[k]));
          const Word bit = Word{1} << (v % 64);
          candidates[k] &= ~bit;
          uncolored[k] &= ~bit;
          const Word* nv = row(v);
          for (std::size_t w = k; w < words_; ++w) candidates[w] &= ~nv[w];
          vertices.push_back(v);
          colors.push_back(color);
        }
      }
      remaining = std::any_of(uncolored.begin(), uncolored.end(), [](Word w) { return w != 0; });
    }
  }

  void expand(std::vector<Word>& p) {
    if (aborted_ || out_of_budget()) {
      aborted_ = true;
      return;
    }
    std::vector<std::uint32_t> vertices, colors;
    color_sort(p, vertices, colors);
    std::vector<Word> next(words_);
    for (std::size_t i = vertices.size(); i-- > 0;) {
      if (current_.size() + colors[i] <= best_.size()) return;
      const auto v = vertices[i];
      current_.push_back(v);
      bool empty = true;
      const Word* nv = row(v);
      for (std::size_t k = 0; k < words_; ++k) {
        next[k] = p[k] & nv[k];
        empty = empty && next[k] == 0;
      }
      if (empty) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
        if (aborted_) return;
      }
      current_.pop_back();
      p[v / 64] &= ~(Word{1} << (v % 64));
    }
  }

  std::size_t n_;
  std::size_t words_;
  SolveBudget budget_;
  std::vector<Vertex> order_;
  std::vector<Word> adj_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

CliqueResult clique_number(const Graph& g, const SolveBudget& budget) {
  if (g.n() == 0) throw InputError("clique number of a graph with no vertices");
  CliqueResult result = MaxCliqueSearch(g, budget).run();
  if (result.exact() && !is_clique(g, result.witness))
    throw ConsistencyError("maximum clique witness is not a clique");
  return result;
}

}  // namespace cliquebound

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliquebound {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

// Simple undirected graph on vertices 0..n-1, stored as one bitset row per
// vertex. Values are immutable once built and safe to share across threads.
class Graph {
 public:
  Graph() = default;

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  std::size_t degree(Vertex v) const noexcept;
  std::vector<Vertex> neighbors(Vertex v) const;

  // Edges (u, v) with u < v, in graph6 column order: (0,1),(0,2),(1,2),(0,3),...
  std::vector<Edge> edges() const;

  // Bitset row of v: bit (w & 63) of word (w >> 6) is set iff v ~ w.
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {rows_.data() + v * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  // Copy of this graph with edge {u, v} added.
  Graph with_edge(Vertex u, Vertex v) const;
  // Vertex v of the result is vertex perm[v] of this graph.
  Graph relabeled(std::span<const Vertex> perm) const;

  bool is_complete() const noexcept { return m_ == n_ * (n_ - 1) / 2 || n_ == 0; }
  bool is_connected() const;
  std::size_t isolated_vertex_count() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Accumulates edges, then freezes them into a Graph. Duplicate edges are
// collapsed; self-loops and out-of-range vertices throw InputError.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  GraphBuilder& add_edge(Vertex u, Vertex v);
  Graph build() &&;

 private:
  Graph g_;
};

struct DegreeStats {
  std::vector<std::size_t> degrees;
  double average = 0.0;  // 2m / n
};

Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

// graph6 codec. Supports the 1-, 4- and 8-byte size headers and an optional
// leading ">>graph6<<" marker when parsing.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Whitespace-separated "u v" pairs, one per line, '#' starts a comment.
// n is one more than the largest vertex mentioned unless given explicitly.
Graph parse_edge_list(std::string_view text, std::size_t n = 0);

// Generators
Graph kneser_graph(unsigned p, unsigned k);
Graph complete_graph(std::size_t n);
Graph complete_multipartite(std::span<const std::size_t> parts);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph empty_graph(std::size_t n);

// G(n, p) with std::mt19937_64 (the standard-specified 64-bit Mersenne
// Twister, seeded with `seed`). Pairs are visited in graph6 column order and
// each draw is mapped to [0, 1) as (x >> 11) * 2^-53; an edge is kept when the
// draw is < p. The stream is bit-identical on every conforming platform.
Graph gnp_graph(std::size_t n, double p, std::uint64_t seed);

// Seed for trial `index` of a campaign with master seed `master`: the
// (index + 1)-th output of SplitMix64 started at `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Labeled enumeration over the upper-triangle bitmask. Bit i of the mask
// is the i-th pair in graph6 column order.
inline constexpr std::size_t kEnumerationCap = 8;

std::uint64_t labeled_graph_count(std::size_t n);
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

// Single-pass stream of all 2^C(n,2) labeled graphs in increasing mask order,
// optionally restricted to masks in [first, last).
class LabeledGraphStream {
 public:
  explicit LabeledGraphStream(std::size_t n);
  LabeledGraphStream(std::size_t n, std::uint64_t first, std::uint64_t last);

  // Writes the next graph and its mask; false once exhausted.
  bool next(Graph& out, std::uint64_t& mask);

 private:
  std::size_t n_;
  std::uint64_t cursor_;
  std::uint64_t last_;
};

std::uint64_t triangle_count(const Graph& g);
DegreeStats degree_stats(const Graph& g);

}  // namespace cliquebound

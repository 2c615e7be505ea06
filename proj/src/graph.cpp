#include "cliquebound/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <string>

#include "cliquebound/errors.hpp"

namespace cliquebound {

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < n_; ++w)
    if (adjacent(v, w)) out.push_back(w);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex j = 1; j < n_; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  GraphBuilder b(n_);
  for (auto [x, y] : edges()) b.add_edge(x, y);
  b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw InputError("permutation size does not match vertex count");
  std::vector<Vertex> inverse(n_, static_cast<Vertex>(n_));
  for (Vertex v = 0; v < n_; ++v) {
    if (perm[v] >= n_ || inverse[perm[v]] != n_) throw InputError("not a permutation");
    inverse[perm[v]] = v;
  }
  GraphBuilder b(n_);
  for (auto [x, y] : edges()) b.add_edge(inverse[x], inverse[y]);
  return std::move(b).build();
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w = 0; w < n_; ++w) {
      if (!seen[w] && adjacent(v, w)) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

std::size_t Graph::isolated_vertex_count() const {
  std::size_t count = 0;
  for (Vertex v = 0; v < n_; ++v)
    if (degree(v) == 0) ++count;
  return count;
}

GraphBuilder::GraphBuilder(std::size_t n) {
  g_.n_ = n;
  g_.words_ = (n + 63) / 64;
  g_.rows_.assign(n * g_.words_, 0);
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= g_.n_ || v >= g_.n_)
    throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") out of range for n = " + std::to_string(g_.n_));
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  auto& uv = g_.rows_[u * g_.words_ + (v >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (uv & bit) return *this;
  uv |= bit;
  g_.rows_[v * g_.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++g_.m_;
  return *this;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph parse_edge_list(std::string_view text, std::size_t n) {
  std::vector<Edge> edges;
  std::size_t max_vertex = 0;
  bool any = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    const std::size_t line_start = pos;
    pos = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    Vertex ends[2];
    int found = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      if (found == 2) throw ParseError("trailing token in edge list", line_start + i);
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), ends[found]);
      if (ec != std::errc{}) throw ParseError("expected a vertex index", line_start + i);
      ++found;
      i = static_cast<std::size_t>(ptr - line.data());
    }
    if (found == 0) continue;
    if (found == 1) throw ParseError("edge needs two endpoints", line_start);
    edges.emplace_back(ends[0], ends[1]);
    max_vertex = std::max<std::size_t>(max_vertex, std::max(ends[0], ends[1]));
    any = true;
  }
  if (n == 0) n = any ? max_vertex + 1 : 0;
  return from_edge_list(n, edges);
}

std::uint64_t triangle_count(const Graph& g) {
  // For each edge (u, v) with u < v, count common neighbours w > v.
  std::uint64_t t = 0;
  const std::size_t words = g.words_per_row();
  for (Vertex u = 0; u < g.n(); ++u) {
    auto ru = g.row(u);
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) continue;
      auto rv = g.row(v);
      for (std::size_t k = (v + 1) >> 6; k < words; ++k) {
        std::uint64_t common = ru[k] & rv[k];
        if (k == ((v + 1) >> 6)) common &= ~std::uint64_t{0} << ((v + 1) & 63);
        t += static_cast<std::uint64_t>(std::popcount(common));
      }
    }
  }
  return t;
}

DegreeStats degree_stats(const Graph& g) {
  if (g.n() == 0) throw InputError("degree statistics need at least one vertex");
  DegreeStats s;
  s.degrees.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) s.degrees.push_back(g.degree(v));
  s.average = 2.0 * static_cast<double>(g.m()) / static_cast<double>(g.n());
  return s;
}

}  // namespace cliquebound

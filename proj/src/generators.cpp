#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cliquebound/errors.hpp"
#include "cliquebound/graph.hpp"

namespace cliquebound {

Graph kneser_graph(unsigned p, unsigned k) {
  if (k < 1 || p < 2 * k) throw InputError("kneser_graph needs p >= 2k >= 2");
  if (p > 63) throw InputError("kneser_graph supports p <= 63");

  // k-subsets as bitmasks in increasing numeric order, which is colex order.
  std::vector<std::uint64_t> subsets;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << p;
  while (s < limit) {
    subsets.push_back(s);
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t ripple = s + low;
    s = (((ripple ^ s) >> 2) / low) | ripple;
  }

  GraphBuilder b(subsets.size());
  for (Vertex j = 1; j < subsets.size(); ++j)
    for (Vertex i = 0; i < j; ++i)
      if ((subsets[i] & subsets[j]) == 0) b.add_edge(i, j);
  return std::move(b).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) b.add_edge(i, j);
  return std::move(b).build();
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
  if (parts.empty()) throw InputError("complete_multipartite needs at least one part");
  std::vector<std::size_t> part_of;
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    if (parts[idx] == 0) throw InputError("part sizes must be at least 1");
    part_of.insert(part_of.end(), parts[idx], idx);
  }
  GraphBuilder b(part_of.size());
  for (Vertex j = 1; j < part_of.size(); ++j)
    for (Vertex i = 0; i < j; ++i)
      if (part_of[i] != part_of[j]) b.add_edge(i, j);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle_graph needs n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw InputError("path_graph needs n >= 1");
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 engine(seed);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  GraphBuilder b(n);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      const double u = static_cast<double>(engine() >> 11) * kScale;
      if (u < p) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t labeled_graph_count(std::size_t n) {
  if (n > kEnumerationCap)
    throw InputError("labeled enumeration is capped at n = " + std::to_string(kEnumerationCap));
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1) b.add_edge(i, j);
  return std::move(b).build();
}

LabeledGraphStream::LabeledGraphStream(std::size_t n)
    : LabeledGraphStream(n, 0, labeled_graph_count(n)) {}

LabeledGraphStream::LabeledGraphStream(std::size_t n, std::uint64_t first, std::uint64_t last)
    : n_(n), cursor_(first), last_(last) {
  if (last > labeled_graph_count(n) || first > last) throw InputError("mask range out of bounds");
}

bool LabeledGraphStream::next(Graph& out, std::uint64_t& mask) {
  if (cursor_ >= last_) return false;
  mask = cursor_++;
  out = graph_from_mask(n_, mask);
  return true;
}

}  // namespace cliquebound

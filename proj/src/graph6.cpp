#include <cstdint>
#include <string>
#include <string_view>

#include "cliquebound/errors.hpp"
#include "cliquebound/graph.hpp"

namespace cliquebound {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
// Largest vertex count we are willing to materialise as a dense bitset graph.
constexpr std::uint64_t kMaxVertices = 65536;

int sextet(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  // Tolerate a trailing line terminator.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  std::uint64_t n = 0;
  if (text[pos] != '~') {
    n = static_cast<std::uint64_t>(sextet(text, pos));
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    if (pos + 8 > text.size()) throw ParseError("truncated 8-byte size header", text.size());
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + 2 + i));
    pos += 8;
  } else {
    if (pos + 4 > text.size()) throw ParseError("truncated 4-byte size header", text.size());
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + 1 + i));
    pos += 4;
  }
  if (n > kMaxVertices) throw ParseError("graph too large (n = " + std::to_string(n) + ")", 0);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t payload = (bits + 5) / 6;
  if (text.size() - pos < payload)
    throw ParseError("truncated bit payload: expected " + std::to_string(payload) + " bytes", text.size());
  if (text.size() - pos > payload) throw ParseError("unexpected bytes after bit payload", pos + payload);

  GraphBuilder b(n);
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + k / 6;
      if ((sextet(text, at) >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  // Validate padding bytes even when there were no edge bits in them.
  for (std::size_t at = pos; at < text.size(); ++at) sextet(text, at);
  return std::move(b).build();
}

std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else if (n <= kMaxVertices) {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw InputError("graph too large for graph6 encoding");
  }

  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace cliquebound

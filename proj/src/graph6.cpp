#include <string>

#include "chromabound/errors.hpp"
#include "chromabound/graph.hpp"

namespace chromabound {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw MalformedGraph6("empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw MalformedGraph6("byte outside 63..126 in '" + std::string(text) + "'");
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw MalformedGraph6("unsupported order prefix");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw MalformedGraph6("order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  const long nbits = complete_size(n);
  const auto expected = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos != expected) {
    throw MalformedGraph6("expected " + std::to_string(expected) + " data bytes for order " + std::to_string(n) +
                          ", got " + std::to_string(text.size() - pos));
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[static_cast<std::size_t>(i)] |= singleton(j);
        rows[static_cast<std::size_t>(j)] |= singleton(i);
      }
    }
  }
  // Padding bits must be zero for a canonical encoding.
  for (; k % 6 != 0; ++k) {
    const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw MalformedGraph6("nonzero padding bits");
  }
  return Graph::from_adjacency(std::move(rows));
}

}  // namespace chromabound

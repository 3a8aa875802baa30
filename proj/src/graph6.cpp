#include "sic/graph6.hpp"

#include <algorithm>

namespace sic {

namespace {
constexpr int kShortFormMax = 62;
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("character outside 63..126", i);
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kShortFormMax) throw Graph6Error("only the short form (n <= 62) is supported", 0);
  if (n < 1) throw Graph6Error("graph must have at least one vertex", 0);

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bit_count + 5) / 6;
  if (text.size() != expected) {
    throw Graph6Error("length " + std::to_string(text.size()) + " does not match n=" +
                          std::to_string(n) + " (expected " + std::to_string(expected) + ")",
                      std::min(text.size(), expected));
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  for (; k % 6 != 0; ++k) {
    const int group = static_cast<unsigned char>(text[1 + k / 6]) - 63;
    if ((group >> (5 - k % 6)) & 1) throw Graph6Error("nonzero padding bit", 1 + k / 6);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > kShortFormMax) {
    throw GraphError("graph6 short form supports 1..62 vertices, got " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(63 + n));
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

}  // namespace sic

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sic/graph.hpp"

namespace sic {

/// Raised for malformed graph6 text; `offset()` is the byte that was rejected.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Short form only (1 <= n <= 62). A trailing newline is tolerated.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

}  // namespace sic

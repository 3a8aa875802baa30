#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sic/graph.hpp"
#include "sic/rational.hpp"

namespace sic {

inline constexpr int kMaxEnumerationOrder = 13;

struct EnumerationOptions {
  /// OpenMP threads used for the subtree phase.
  int workers = 1;
  /// Keep (in the report) only graphs with chromatic number above this.
  std::optional<int> chi_greater_than;
  /// Graphs of this order are the independent work units.
  int seed_order = 8;
};

struct EnumerationReport {
  int n_max = 0;
  /// counts[n] = number of square-free connected classes on n vertices.
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  /// graph6 of every emitted graph passing the chromatic filter.
  std::vector<std::string> filtered;
  double seconds = 0;
};

/// Receives emitted graphs on the calling thread, in a deterministic order.
using GraphSink = std::function<void(const Graph&)>;

/// One representative per isomorphism class of square-free connected graphs on
/// 1..n_max vertices, by canonical vertex augmentation (a child is kept only if
/// the new vertex lies in the orbit of the canonically last vertex). Subtrees
/// below `seed_order` run in parallel.
EnumerationReport enumerate_square_free_connected(int n_max, const GraphSink& sink = {},
                                                  const EnumerationOptions& options = {});

/// Serial reference: level-by-level closure under square-free one-vertex
/// extensions with global canonical-form deduplication. Slower; kept for tests
/// and benchmarks.
EnumerationReport enumerate_square_free_connected_reference(int n_max, const GraphSink& sink = {},
                                                            const EnumerationOptions& options = {});

/// Every isomorphism class of graphs on exactly n <= 7 vertices, from all
/// 2^(n(n-1)/2) labeled graphs deduplicated by canonical form.
std::vector<Graph> brute_force_enumerate(int n);

struct ThirteenVertexCensus {
  /// Connected square-free 13-vertex graphs with chi > 3, canonical graph6.
  std::vector<std::string> chi_gt3;
  /// Those among them with chi_f > 3 and their exact chi_f.
  std::vector<std::pair<std::string, Rational>> chi_f_gt3;
  /// chi_gt3 equals the published 13-vertex list as a set of canonical forms.
  bool matches_published_list = false;
  EnumerationReport report;
};

ThirteenVertexCensus thirteen_vertex_census(const EnumerationOptions& options = {});

}  // namespace sic

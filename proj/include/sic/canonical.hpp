#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sic/graph.hpp"

namespace sic {

struct CanonicalForm {
  Graph graph;
  /// labeling[v] is the canonical label of input vertex v.
  std::vector<int> labeling;
  /// Smallest vertex of the automorphism orbit containing v.
  std::vector<int> orbit;
  /// Automorphism generators found during the search (vertex -> image).
  std::vector<std::vector<int>> generators;
};

/// Canonical labeling by partition refinement and individualization with
/// automorphism pruning. Isomorphic inputs give identical `graph`.
///
/// `colors` optionally fixes an ordered vertex colouring: only colour-preserving
/// isomorphisms are considered, and vertices are canonically ordered by
/// ascending colour. Colours must be assigned isomorphism-invariantly for the
/// result to be a canonical form of the uncoloured graph.
CanonicalForm canonical_form(const Graph& g, std::span<const std::uint64_t> colors = {});

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace sic

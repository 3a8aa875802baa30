#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sic/graph.hpp"
#include "sic/independent_sets.hpp"
#include "sic/rational.hpp"

namespace sic {

struct ChromaticResult {
  int value = 0;
  std::vector<int> coloring;  // colour per vertex, 0..value-1
  /// Clique of size `value` when the clique bound closed the search; empty when
  /// optimality came from exhausting the (value-1)-colouring search.
  std::optional<VertexSet> clique;
};

ChromaticResult chromatic_number(const Graph& g);

/// Exact test for a proper colouring with at most k colours.
bool is_k_colorable(const Graph& g, int k, std::vector<int>* coloring = nullptr);

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring);

struct FractionalOptions {
  /// Above this many maximal independent sets the LP is built lazily with an
  /// exact max-weight independent-set separation oracle.
  std::size_t enumeration_cap = kDefaultIndependentSetCap;
  std::size_t max_separation_rounds = 100000;
};

struct FractionalResult {
  Rational value;
  std::vector<Rational> weights;  // optimal fractional-clique weights, sum = value
  std::vector<VertexSet> tight_sets;
  /// Dual solution: a fractional cover by independent sets with total weight = value.
  std::vector<std::pair<VertexSet, Rational>> cover;
  std::size_t constraints = 0;
  bool lazy = false;
};

/// Exact fractional chromatic number as the optimum of
///   maximize sum_i w_i  s.t.  sum_{j in I} w_j <= 1 for every independent set I, w >= 0.
FractionalResult fractional_chromatic_number(const Graph& g, const FractionalOptions& options = {});

struct NecessaryConditions {
  bool chi_ok = false;    // chi(g) > d
  bool chi_f_ok = false;  // chi_f(g) > d
};

NecessaryConditions sic_necessary_conditions(const Graph& g, int d);

/// Ramanathan-Horodecki graph test: chi_f(g) > d / r, compared exactly.
bool rh_sic_graph_test(const Graph& g, int d, int r);

}  // namespace sic

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sic/graph.hpp"

namespace sic {

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultIndependentSetCap = 100000;

/// Inclusion-maximal independent sets in ascending bit-mask order. Runs pivoting
/// Bron-Kerbosch on the complement; throws CapacityError once more than `cap`
/// sets have been found.
std::vector<VertexSet> maximal_independent_sets(const Graph& g,
                                                std::size_t cap = kDefaultIndependentSetCap);

bool is_independent(const Graph& g, VertexSet s);

template <class Weight>
struct WeightedSet {
  VertexSet set;
  Weight weight{};
};

namespace detail {

template <class Weight>
void mwis_search(const Graph& g, const std::vector<int>& order, const std::vector<Weight>& w,
                 const std::vector<Weight>& suffix, std::size_t pos, std::uint64_t chosen,
                 std::uint64_t blocked, const Weight& value, WeightedSet<Weight>& best) {
  if (value > best.weight) {
    best.weight = value;
    best.set = VertexSet(chosen);
  }
  for (std::size_t i = pos; i < order.size(); ++i) {
    if (!(value + suffix[i] > best.weight)) return;
    const int v = order[i];
    if ((blocked >> v) & 1U) continue;
    mwis_search(g, order, w, suffix, i + 1, chosen | (std::uint64_t{1} << v),
                blocked | g.row(v) | (std::uint64_t{1} << v), value + w[v], best);
  }
}

}  // namespace detail

/// Maximum-weight independent set for non-negative weights by branch and bound;
/// works for any ordered field (exact Rational or double).
template <class Weight>
WeightedSet<Weight> max_weight_independent_set(const Graph& g, const std::vector<Weight>& w) {
  const int n = g.order();
  if (static_cast<int>(w.size()) != n) throw GraphError("weight vector length mismatch");
  std::vector<int> order;
  for (int v = 0; v < n; ++v)
    if (w[v] > Weight(0)) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
  std::vector<Weight> suffix(order.size() + 1, Weight(0));
  for (std::size_t i = order.size(); i-- > 0;) suffix[i] = suffix[i + 1] + w[order[i]];
  WeightedSet<Weight> best{VertexSet(), Weight(0)};
  detail::mwis_search(g, order, w, suffix, 0, 0, 0, Weight(0), best);
  return best;
}

}  // namespace sic

#include "sic/independent_sets.hpp"

#include <algorithm>

namespace sic {

namespace {

struct BronKerbosch {
  const Graph& complement;
  std::size_t cap;
  std::vector<VertexSet> found;

  void expand(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
    if (p == 0) {
      if (x == 0) {
        if (found.size() >= cap) {
          throw CapacityError("more than " + std::to_string(cap) + " maximal independent sets");
        }
        found.emplace_back(r);
      }
      return;
    }
    // Pivot: vertex of P u X with most neighbours in P, lowest index on ties.
    int pivot = -1, pivot_degree = -1;
    for (std::uint64_t b = p | x; b; b &= b - 1) {
      const int u = std::countr_zero(b);
      const int d = std::popcount(complement.row(u) & p);
      if (d > pivot_degree) {
        pivot = u;
        pivot_degree = d;
      }
    }
    for (std::uint64_t b = p & ~complement.row(pivot); b; b &= b - 1) {
      const int v = std::countr_zero(b);
      const std::uint64_t bit = std::uint64_t{1} << v;
      expand(r | bit, p & complement.row(v), x & complement.row(v));
      p &= ~bit;
      x |= bit;
    }
  }
};

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g, std::size_t cap) {
  const Graph comp = complement(g);
  BronKerbosch bk{comp, cap, {}};
  bk.expand(0, VertexSet::all(g.order()).bits, 0);
  std::sort(bk.found.begin(), bk.found.end());
  return std::move(bk.found);
}

bool is_independent(const Graph& g, VertexSet s) {
  for (std::uint64_t b = s.bits; b; b &= b - 1) {
    if (g.row(std::countr_zero(b)) & s.bits) return false;
  }
  return true;
}

}  // namespace sic

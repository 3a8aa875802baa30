#include "sic/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "sic/simplex.hpp"

namespace sic {

namespace {

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

struct ColoringSearch {
  const Graph& g;
  const std::vector<int>& order;
  int k;
  std::vector<std::uint64_t> classes;
  std::vector<int> colour;

  bool assign(std::size_t i, int used) {
    if (i == order.size()) return true;
    const int v = order[i];
    // Colours beyond the first unused one are symmetric; try at most one of them.
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (classes[c] & g.row(v)) continue;
      classes[c] |= std::uint64_t{1} << v;
      colour[v] = c;
      if (assign(i + 1, std::max(used, c + 1))) return true;
      classes[c] &= ~(std::uint64_t{1} << v);
    }
    return false;
  }
};

}  // namespace

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (coloring[u] == coloring[v]) return false;
  return std::all_of(coloring.begin(), coloring.end(), [](int c) { return c >= 0; });
}

bool is_k_colorable(const Graph& g, int k, std::vector<int>* coloring) {
  if (g.order() == 0) return true;
  if (k <= 0) return false;
  const auto order = degree_order(g);
  ColoringSearch search{g, order, k, std::vector<std::uint64_t>(k, 0), std::vector<int>(g.order(), -1)};
  if (!search.assign(0, 0)) return false;
  if (coloring) *coloring = std::move(search.colour);
  return true;
}

ChromaticResult chromatic_number(const Graph& g) {
  ChromaticResult result;
  const int n = g.order();
  if (n == 0) return result;

  // Greedy upper bound in the same deterministic order.
  std::vector<int> colour(n, -1);
  int upper = 0;
  for (int v : degree_order(g)) {
    std::uint64_t taken = 0;
    for (int u = 0; u < n; ++u)
      if (colour[u] >= 0 && g.adjacent(u, v)) taken |= std::uint64_t{1} << colour[u];
    colour[v] = std::countr_one(taken);
    upper = std::max(upper, colour[v] + 1);
  }
  const VertexSet clique = maximum_clique(g);
  const int lower = clique.size();

  result.value = upper;
  result.coloring = colour;
  for (int k = upper - 1; k >= lower; --k) {
    std::vector<int> better;
    if (!is_k_colorable(g, k, &better)) break;
    result.value = k;
    result.coloring = std::move(better);
  }
  if (result.value == lower) result.clique = clique;
  return result;
}

namespace {

std::vector<Rational> unit_row(int n, VertexSet s) {
  std::vector<Rational> row(n, Rational(0));
  for (int v : s.members()) row[v] = Rational(1);
  return row;
}

VertexSet extend_to_maximal(const Graph& g, VertexSet s) {
  for (int v = 0; v < g.order(); ++v) {
    if (!s.contains(v) && (g.row(v) & s.bits) == 0) s.insert(v);
  }
  return s;
}

}  // namespace

FractionalResult fractional_chromatic_number(const Graph& g, const FractionalOptions& options) {
  const int n = g.order();
  FractionalResult out;
  if (n == 0) return out;

  std::vector<VertexSet> sets;
  try {
    sets = maximal_independent_sets(g, options.enumeration_cap);
  } catch (const CapacityError&) {
    out.lazy = true;
  }

  LinearProgram<Rational> lp;
  lp.objective.assign(n, Rational(1));
  LpResult<Rational> solved;
  if (!out.lazy) {
    for (auto s : sets) lp.add_row(unit_row(n, s), Rational(1));
    solved = lp_solve_exact(lp);
  } else {
    // Start from a cover of the vertices by maximal independent sets.
    std::uint64_t covered = 0;
    for (int v = 0; v < n; ++v) {
      if ((covered >> v) & 1U) continue;
      const VertexSet s = extend_to_maximal(g, VertexSet{v});
      covered |= s.bits;
      sets.push_back(s);
      lp.add_row(unit_row(n, s), Rational(1));
    }
    for (std::size_t round = 0;; ++round) {
      if (round >= options.max_separation_rounds) {
        throw CapacityError("fractional chromatic separation did not converge");
      }
      solved = lp_solve_exact(lp);
      const auto violated = max_weight_independent_set(g, solved.solution);
      if (violated.weight <= Rational(1)) break;
      const VertexSet s = extend_to_maximal(g, violated.set);
      sets.push_back(s);
      lp.add_row(unit_row(n, s), Rational(1));
    }
  }
  if (solved.status != LpStatus::optimal || !verify_lp_certificate(lp, solved)) {
    throw LpError("fractional clique LP failed its optimality certificate");
  }

  out.value = solved.value;
  out.weights = solved.solution;
  out.constraints = sets.size();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Rational load;
    for (int v : sets[i].members()) load += out.weights[v];
    if (load == Rational(1)) out.tight_sets.push_back(sets[i]);
    if (solved.dual[i].sign() > 0) out.cover.emplace_back(sets[i], solved.dual[i]);
  }
  return out;
}

NecessaryConditions sic_necessary_conditions(const Graph& g, int d) {
  NecessaryConditions c;
  c.chi_ok = !is_k_colorable(g, d);
  c.chi_f_ok = fractional_chromatic_number(g).value > Rational(d);
  return c;
}

bool rh_sic_graph_test(const Graph& g, int d, int r) {
  if (r < 1 || d < r) throw GraphError("rh_sic_graph_test requires 1 <= r <= d");
  return fractional_chromatic_number(g).value > Rational(d, r);
}

}  // namespace sic

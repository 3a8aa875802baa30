#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "sic/coloring.hpp"
#include "sic/graph6.hpp"
#include "sic/known_graphs.hpp"

using namespace sic;

namespace {

std::vector<Graph> fixture_graphs() {
  std::vector<Graph> out = {complete_graph(4), cycle_graph(5), cycle_graph(7), path_graph(4),
                            Graph(3), cycle_graph(4), complement(cycle_graph(7))};
  for (auto s : known::kThirteenVertexChiAbove3) out.push_back(parse_graph6(s));
  return out;
}

}  // namespace

TEST_CASE("chromatic number of small families") {
  CHECK(chromatic_number(complete_graph(4)).value == 4);
  CHECK(chromatic_number(cycle_graph(5)).value == 3);
  CHECK(chromatic_number(cycle_graph(6)).value == 2);
  CHECK(chromatic_number(Graph(5)).value == 1);

  const auto k4 = chromatic_number(complete_graph(4));
  REQUIRE(k4.clique);
  CHECK(k4.clique->size() == 4);
  const auto c5 = chromatic_number(cycle_graph(5));
  CHECK_FALSE(c5.clique);  // odd cycle: omega = 2 < 3
}

TEST_CASE("chromatic number of the thirteen-vertex graphs is 4 with proper witnesses") {
  for (auto s : known::kThirteenVertexChiAbove3) {
    const Graph g = parse_graph6(s);
    const auto r = chromatic_number(g);
    CHECK(r.value == 4);
    CHECK(is_proper_coloring(g, r.coloring));
    CHECK(*std::max_element(r.coloring.begin(), r.coloring.end()) == r.value - 1);
  }
}

TEST_CASE("fractional chromatic numbers") {
  CHECK(fractional_chromatic_number(cycle_graph(5)).value == Rational(5, 2));
  CHECK(fractional_chromatic_number(complete_graph(3)).value == Rational(3));
  CHECK(fractional_chromatic_number(parse_graph6(known::kYuOh)).value == Rational(35, 11));
  CHECK(fractional_chromatic_number(parse_graph6(known::kYuOhMinusEdge)).value == Rational(19, 6));
  CHECK(fractional_chromatic_number(parse_graph6(known::kThirteenQuarters)).value == Rational(13, 4));
  int above_three = 0;
  for (auto s : known::kThirteenVertexChiAbove3) {
    if (fractional_chromatic_number(parse_graph6(s)).value > Rational(3)) ++above_three;
  }
  CHECK(above_three == 3);
}

TEST_CASE("fractional result invariants and duality") {
  for (const Graph& g : fixture_graphs()) {
    const auto r = fractional_chromatic_number(g);
    Rational total;
    for (const auto& w : r.weights) {
      CHECK(w.sign() >= 0);
      total += w;
    }
    CHECK(total == r.value);
    for (auto s : maximal_independent_sets(g)) {
      Rational load;
      for (int v : s.members()) load += r.weights[v];
      CHECK(load <= Rational(1));
    }
    CHECK_FALSE(r.tight_sets.empty());
    // The dual is a fractional colouring: every vertex covered at least once.
    Rational cover_total;
    std::vector<Rational> coverage(g.order(), Rational(0));
    for (const auto& [set, weight] : r.cover) {
      CHECK(is_independent(g, set));
      cover_total += weight;
      for (int v : set.members()) coverage[v] += weight;
    }
    for (const auto& c : coverage) CHECK(c >= Rational(1));
    CHECK(cover_total == r.value);
  }
}

TEST_CASE("lazy separation agrees with full enumeration") {
  FractionalOptions lazy;
  lazy.enumeration_cap = 3;
  for (const Graph& g : fixture_graphs()) {
    const auto full = fractional_chromatic_number(g);
    const auto sep = fractional_chromatic_number(g, lazy);
    CHECK(sep.value == full.value);
    if (maximal_independent_sets(g).size() > 3) CHECK(sep.lazy);
  }
}

TEST_CASE("sandwich bounds and n/alpha on random graphs") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 80; ++t) {
    const int n = 3 + t % 10;
    const Graph g = oracle::random_graph(n, 0.2 + 0.05 * (t % 8), rng);
    const auto chi = chromatic_number(g);
    const auto frac = fractional_chromatic_number(g);
    const int omega = maximum_clique(g).size();
    CHECK(Rational(omega) <= frac.value);
    CHECK(frac.value <= Rational(chi.value));
    CHECK(chi.value <= n);
    CHECK(frac.value >= Rational(n, oracle::independence_number(g)));
    CHECK(is_proper_coloring(g, chi.coloring));
    CHECK_FALSE(is_k_colorable(g, chi.value - 1));
  }
}

TEST_CASE("cone raises chi and chi_f by exactly one") {
  for (const Graph& g : fixture_graphs()) {
    CHECK(fractional_chromatic_number(cone(g)).value == fractional_chromatic_number(g).value + Rational(1));
    CHECK(chromatic_number(cone(g)).value == chromatic_number(g).value + 1);
  }
}

TEST_CASE("necessary conditions and the RH graph test") {
  const Graph yo = parse_graph6(known::kYuOh);
  auto c = sic_necessary_conditions(yo, 3);
  CHECK(c.chi_ok);
  CHECK(c.chi_f_ok);
  c = sic_necessary_conditions(cycle_graph(5), 3);
  CHECK_FALSE(c.chi_ok);
  CHECK_FALSE(c.chi_f_ok);

  CHECK(rh_sic_graph_test(yo, 3, 1));
  CHECK(rh_sic_graph_test(cone(yo), 4, 1));
  CHECK(fractional_chromatic_number(cone(yo)).value == Rational(46, 11));
  CHECK_FALSE(rh_sic_graph_test(complete_graph(3), 3, 1));
  CHECK(rh_sic_graph_test(cycle_graph(5), 5, 3));
  CHECK_FALSE(rh_sic_graph_test(cycle_graph(5), 5, 2));  // equality is not enough
  CHECK_THROWS_AS(rh_sic_graph_test(yo, 3, 0), GraphError);
}

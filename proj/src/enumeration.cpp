#include "sic/enumeration.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <set>
#include <unordered_set>

#include "sic/canonical.hpp"
#include "sic/coloring.hpp"
#include "sic/graph6.hpp"
#include "sic/known_graphs.hpp"

namespace sic {

namespace {

using Mask = std::uint64_t;

// Upper triangle of a graph on <= 13 vertices (78 bits).
struct PackedKey {
  Mask lo = 0, hi = 0;
  friend bool operator==(const PackedKey&, const PackedKey&) = default;
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& k) const {
    return std::hash<Mask>{}(k.lo * 0x9E3779B97F4A7C15ULL ^ (k.hi + 0x632BE59BD9B4E019ULL));
  }
};

PackedKey pack(const Graph& g) {
  PackedKey key;
  int bit = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (!g.adjacent(i, j)) continue;
      if (bit < 64) key.lo |= Mask{1} << bit;
      else key.hi |= Mask{1} << (bit - 64);
    }
  }
  return key;
}

void check_order(int n_max) {
  if (n_max < 1 || n_max > kMaxEnumerationOrder) {
    throw GraphError("n_max must be in 1.." + std::to_string(kMaxEnumerationOrder));
  }
}

// Vertices at distance exactly two, per vertex. A new vertex may join u and w
// only if they have no common neighbour, and may join at most one neighbour of
// any existing vertex; both reduce to: chosen vertices are pairwise not at
// distance two.
std::array<Mask, kMaxVertices> distance_two(const Graph& g) {
  std::array<Mask, kMaxVertices> d2{};
  for (int u = 0; u < g.order(); ++u) {
    Mask reach = 0;
    for (Mask b = g.row(u); b; b &= b - 1) reach |= g.row(std::countr_zero(b));
    d2[u] = reach & ~(Mask{1} << u);
  }
  return d2;
}

Graph extend(const Graph& g, Mask neighbourhood) {
  const int n = g.order();
  Graph child(n + 1);
  for (auto [u, v] : g.edges()) child.add_edge(u, v);
  for (Mask b = neighbourhood; b; b &= b - 1) child.add_edge(std::countr_zero(b), n);
  return child;
}

/// Calls visit(S) for every admissible neighbourhood S of a new vertex with
/// |S| >= min_size.
template <class Visit>
void for_each_neighbourhood(const std::array<Mask, kMaxVertices>& d2, Mask candidates, Mask chosen,
                            int min_size, Visit&& visit) {
  if (std::popcount(chosen) + std::popcount(candidates) < min_size) return;
  if (candidates == 0) {
    visit(chosen);
    return;
  }
  const int v = std::countr_zero(candidates);
  const Mask rest = candidates & (candidates - 1);
  for_each_neighbourhood(d2, rest & ~d2[v], chosen | (Mask{1} << v), min_size, visit);
  for_each_neighbourhood(d2, rest, chosen, min_size, visit);
}

// Vertex invariant used both as the prefilter and as the initial colouring of
// the canonical search: (degree, sum of neighbour degrees).
inline std::uint64_t vertex_key(const Graph& g, int v) {
  std::uint64_t s = 0;
  for (Mask b = g.row(v); b; b &= b - 1) s += g.degree(std::countr_zero(b));
  return (static_cast<std::uint64_t>(g.degree(v)) << 16) | s;
}

struct Counters {
  std::vector<std::uint64_t> counts;
  std::vector<std::string> filtered;
  std::vector<std::string> emitted;  // graph6, only when a sink is attached
};

class Augmenter {
 public:
  Augmenter(int n_max, const EnumerationOptions& options, bool keep_emitted)
      : n_max_(n_max), options_(options), keep_emitted_(keep_emitted) {}

  // Handles a freshly accepted graph: emit if connected, recurse or stash.
  void visit(const Graph& g, Counters& out, std::vector<Graph>* seeds, int seed_order) const {
    const int n = g.order();
    if (is_connected(g)) emit(g, out);
    if (n >= n_max_) return;
    if (seeds && n == seed_order) {
      seeds->push_back(g);
      return;
    }
    expand(g, [&](const Graph& child) { visit(child, out, seeds, seed_order); });
  }

  template <class OnChild>
  void expand(const Graph& parent, OnChild&& on_child) const {
    const int n = parent.order();
    const bool last_level = n + 1 == n_max_;
    const auto d2 = distance_two(parent);
    int max_degree = 0;
    for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, parent.degree(v));

    std::unordered_set<PackedKey, PackedKeyHash> seen;
    std::array<std::uint64_t, kMaxVertices> keys;
    for_each_neighbourhood(d2, VertexSet::all(n).bits, 0, max_degree, [&](Mask s) {
      const Graph child = extend(parent, s);
      if (last_level && !is_connected(child)) return;
      // The new vertex must carry the largest invariant to be canonically last.
      const std::uint64_t own = vertex_key(child, n);
      for (int v = 0; v < n; ++v) {
        keys[v] = vertex_key(child, v);
        if (keys[v] > own) return;
      }
      keys[n] = own;
      const auto cf = canonical_form(child, std::span<const std::uint64_t>(keys.data(), n + 1));
      int last = 0;
      while (cf.labeling[last] != n) ++last;
      if (cf.orbit[last] != cf.orbit[n]) return;
      if (!seen.insert(pack(cf.graph)).second) return;
      on_child(cf.graph);
    });
  }

  void emit(const Graph& g, Counters& out) const {
    ++out.counts[g.order()];
    if (options_.chi_greater_than && !is_k_colorable(g, *options_.chi_greater_than)) {
      out.filtered.push_back(encode_graph6(g));
    }
    if (keep_emitted_) out.emitted.push_back(encode_graph6(g));
  }

 private:
  int n_max_;
  const EnumerationOptions& options_;
  bool keep_emitted_;
};

void finish(EnumerationReport& report, std::vector<Counters>& parts, const GraphSink& sink) {
  report.counts.assign(report.n_max + 1, 0);
  for (auto& part : parts) {
    for (std::size_t n = 0; n < part.counts.size(); ++n) report.counts[n] += part.counts[n];
    for (auto& s : part.filtered) report.filtered.push_back(std::move(s));
    if (sink) {
      for (const auto& s : part.emitted) sink(parse_graph6(s));
    }
  }
  report.total = 0;
  for (auto c : report.counts) report.total += c;
}

}  // namespace

EnumerationReport enumerate_square_free_connected(int n_max, const GraphSink& sink,
                                                  const EnumerationOptions& options) {
  check_order(n_max);
  const auto start = std::chrono::steady_clock::now();
  EnumerationReport report;
  report.n_max = n_max;

  const Augmenter augmenter(n_max, options, static_cast<bool>(sink));
  const int seed_order = std::clamp(options.seed_order, 1, n_max);

  // Serial phase: everything up to the seed order; seed graphs are stashed.
  std::vector<Counters> parts(1);
  parts[0].counts.assign(n_max + 1, 0);
  std::vector<Graph> seeds;
  Augmenter(augmenter).visit(Graph(1), parts[0], &seeds, seed_order);

  // Parallel phase: each seed's subtree is an independent unit.
  std::vector<Counters> subtree(seeds.size());
  const int workers = std::max(1, options.workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    subtree[i].counts.assign(n_max + 1, 0);
    Augmenter local(augmenter);
    local.expand(seeds[i], [&](const Graph& child) { local.visit(child, subtree[i], nullptr, 0); });
  }
  for (auto& part : subtree) parts.push_back(std::move(part));

  finish(report, parts, sink);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

EnumerationReport enumerate_square_free_connected_reference(int n_max, const GraphSink& sink,
                                                            const EnumerationOptions& options) {
  check_order(n_max);
  const auto start = std::chrono::steady_clock::now();
  EnumerationReport report;
  report.n_max = n_max;

  std::vector<Counters> parts(1);
  parts[0].counts.assign(n_max + 1, 0);
  const Augmenter emitter(n_max, options, static_cast<bool>(sink));

  std::vector<Graph> level{Graph(1)};
  for (int n = 1;; ++n) {
    for (const Graph& g : level)
      if (is_connected(g)) emitter.emit(g, parts[0]);
    if (n == n_max) break;
    std::set<std::string> next;
    for (const Graph& g : level) {
      const auto d2 = distance_two(g);
      for_each_neighbourhood(d2, VertexSet::all(n).bits, 0, 0, [&](Mask s) {
        next.insert(encode_graph6(canonical_form(extend(g, s)).graph));
      });
    }
    level.clear();
    for (const auto& s : next) level.push_back(parse_graph6(s));
  }

  finish(report, parts, sink);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Graph> brute_force_enumerate(int n) {
  if (n < 1 || n > 7) throw GraphError("brute_force_enumerate supports 1 <= n <= 7");
  const int pairs = n * (n - 1) / 2;
  std::set<std::string> classes;
  for (Mask mask = 0; mask < (Mask{1} << pairs); ++mask) {
    Graph g(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++k)
        if ((mask >> k) & 1U) g.add_edge(i, j);
    classes.insert(encode_graph6(canonical_form(g).graph));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (const auto& s : classes) out.push_back(parse_graph6(s));
  return out;
}

ThirteenVertexCensus thirteen_vertex_census(const EnumerationOptions& options) {
  EnumerationOptions opts = options;
  opts.chi_greater_than = 3;
  ThirteenVertexCensus census;
  census.report = enumerate_square_free_connected(13, {}, opts);

  std::set<std::string> found, published;
  for (const auto& s : census.report.filtered) {
    const Graph g = parse_graph6(s);
    if (g.order() != 13) continue;
    census.chi_gt3.push_back(encode_graph6(canonical_form(g).graph));
    found.insert(census.chi_gt3.back());
    const Rational chi_f = fractional_chromatic_number(g).value;
    if (chi_f > Rational(3)) census.chi_f_gt3.emplace_back(census.chi_gt3.back(), chi_f);
  }
  for (auto s : known::kThirteenVertexChiAbove3) {
    published.insert(encode_graph6(canonical_form(parse_graph6(s)).graph));
  }
  census.matches_published_list = found == published && found.size() == census.chi_gt3.size();
  return census;
}

}  // namespace sic

#include "sic/graph.hpp"

#include <string>

namespace sic {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside 0..64");
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (std::uint64_t b = adj_[u] >> u >> 1; b; b &= b - 1) {
      out.emplace_back(u, u + 1 + std::countr_zero(b));
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw GraphError("invalid edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  for (int v = 0; v < a.n_; ++v) {
    if (a.adj_[v] != b.adj_[v]) return false;
  }
  return true;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

bool is_square_free(const Graph& g) {
  // A 4-cycle exists iff some pair of distinct vertices shares two neighbours.
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (std::popcount(g.row(u) & g.row(v)) >= 2) return false;
    }
  }
  return true;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return n == 1;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b; b &= b - 1) next |= g.row(std::countr_zero(b));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == VertexSet::all(n).bits;
}

Graph cone(const Graph& g) {
  const int n = g.order();
  if (n >= kMaxVertices) throw GraphError("cone would exceed 64 vertices");
  Graph out(n + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int v = 0; v < n; ++v) out.add_edge(v, n);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if ((s.bits & ~VertexSet::all(g.order()).bits) != 0) {
    throw GraphError("vertex set has members outside the graph");
  }
  const auto keep = s.members();
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation size mismatch");
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

namespace {

void grow_clique(const Graph& g, std::uint64_t current, std::uint64_t candidates,
                 std::uint64_t& best) {
  if (candidates == 0) {
    if (std::popcount(current) > std::popcount(best)) best = current;
    return;
  }
  if (std::popcount(current) + std::popcount(candidates) <= std::popcount(best)) return;
  while (candidates) {
    if (std::popcount(current) + std::popcount(candidates) <= std::popcount(best)) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    grow_clique(g, current | (std::uint64_t{1} << v), candidates & g.row(v), best);
  }
}

}  // namespace

VertexSet maximum_clique(const Graph& g) {
  std::uint64_t best = 0;
  grow_clique(g, 0, VertexSet::all(g.order()).bits, best);
  return VertexSet(best);
}

}  // namespace sic

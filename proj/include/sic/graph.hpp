#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sic {

inline constexpr int kMaxVertices = 64;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of vertex indices stored as a 64-bit mask.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) bits |= std::uint64_t{1} << v;
  }

  static constexpr VertexSet all(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int v) const { return (bits >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  void insert(int v) { bits |= std::uint64_t{1} << v; }
  void erase(int v) { bits &= ~(std::uint64_t{1} << v); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits <=> b.bits; }
};

/// Undirected simple graph on at most 64 vertices, one adjacency word per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  std::uint64_t row(int v) const { return adj_[v]; }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph edgeless_graph(int n);

bool is_square_free(const Graph& g);
bool is_connected(const Graph& g);

Graph cone(const Graph& g);
Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Relabel so that vertex v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// One maximum clique (exhaustive branch and bound).
VertexSet maximum_clique(const Graph& g);

}  // namespace sic

#include "sic/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace sic {

namespace {

using Mask = std::uint64_t;

struct Partition {
  std::array<Mask, kMaxVertices> cells;
  int count = 0;

  bool discrete(int n) const { return count == n; }
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run(std::span<const std::uint64_t> colors) {
    Partition root;
    if (colors.empty()) {
      root.cells[0] = VertexSet::all(n_).bits;
      root.count = n_ > 0 ? 1 : 0;
    } else {
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return colors[a] < colors[b]; });
      for (int i = 0; i < n_; ++i) {
        const int v = order[i];
        if (i == 0 || colors[v] != colors[order[i - 1]]) root.cells[root.count++] = 0;
        root.cells[root.count - 1] |= Mask{1} << v;
      }
    }
    std::array<Mask, 4 * kMaxVertices> queue;
    int tail = 0;
    for (int k = 0; k < root.count; ++k) queue[tail++] = root.cells[k];
    refine(root, queue, tail);

    path_.clear();
    if (n_ > 0) descend(root);

    CanonicalForm out;
    out.labeling.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.labeling[best_order_[i]] = i;
    out.graph = Graph(n_);
    for (int i = 0; i < n_; ++i) {
      for (Mask b = best_rows_[i] >> i >> 1; b; b &= b - 1) {
        out.graph.add_edge(i, i + 1 + std::countr_zero(b));
      }
    }
    std::array<int, kMaxVertices> parent;
    std::iota(parent.begin(), parent.begin() + n_, 0);
    for (const auto& gen : autos_) unite_all(parent, gen);
    out.orbit.resize(n_);
    for (int v = 0; v < n_; ++v) out.orbit[v] = find(parent, v);
    // Roots are the smallest members because unite() keeps the smaller index.
    out.generators.reserve(autos_.size());
    for (const auto& gen : autos_) out.generators.emplace_back(gen.begin(), gen.begin() + n_);
    return out;
  }

 private:
  using Perm = std::array<int, kMaxVertices>;
  using Rows = std::array<Mask, kMaxVertices>;

  // Equitable refinement; every newly created piece is re-queued as a splitter.
  void refine(Partition& p, std::array<Mask, 4 * kMaxVertices>& queue, int tail) const {
    int head = 0;
    while (head < tail && !p.discrete(n_)) {
      const Mask splitter = queue[head++];
      for (int k = 0; k < p.count; ++k) {
        const Mask cell = p.cells[k];
        if ((cell & (cell - 1)) == 0) continue;
        std::array<int, kMaxVertices> verts, counts;
        int size = 0;
        int lo = kMaxVertices + 1, hi = -1;
        for (Mask b = cell; b; b &= b - 1) {
          const int v = std::countr_zero(b);
          const int c = std::popcount(g_.row(v) & splitter);
          verts[size] = v;
          counts[size++] = c;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) continue;
        std::array<Mask, kMaxVertices> pieces;
        int pieces_count = 0;
        for (int value = lo; value <= hi; ++value) {
          Mask piece = 0;
          for (int i = 0; i < size; ++i)
            if (counts[i] == value) piece |= Mask{1} << verts[i];
          if (piece) pieces[pieces_count++] = piece;
        }
        for (int j = p.count - 1; j > k; --j) p.cells[j + pieces_count - 1] = p.cells[j];
        for (int j = 0; j < pieces_count; ++j) {
          p.cells[k + j] = pieces[j];
          if (tail < static_cast<int>(queue.size())) queue[tail++] = pieces[j];
        }
        p.count += pieces_count - 1;
        k += pieces_count - 1;
      }
      if (head == tail) break;
    }
  }

  Partition individualize(const Partition& p, int cell_index, int v) const {
    Partition child;
    child.count = p.count + 1;
    for (int k = 0; k < cell_index; ++k) child.cells[k] = p.cells[k];
    child.cells[cell_index] = Mask{1} << v;
    child.cells[cell_index + 1] = p.cells[cell_index] & ~(Mask{1} << v);
    for (int k = cell_index + 1; k < p.count; ++k) child.cells[k + 1] = p.cells[k];
    std::array<Mask, 4 * kMaxVertices> queue;
    queue[0] = Mask{1} << v;
    refine(child, queue, 1);
    return child;
  }

  void leaf_rows(const Partition& p, Perm& order, Rows& rows) const {
    std::array<int, kMaxVertices> position;
    for (int i = 0; i < n_; ++i) {
      order[i] = std::countr_zero(p.cells[i]);
      position[order[i]] = i;
    }
    for (int i = 0; i < n_; ++i) {
      Mask r = 0;
      for (Mask b = g_.row(order[i]); b; b &= b - 1) r |= Mask{1} << position[std::countr_zero(b)];
      rows[i] = r;
    }
  }

  int compare_rows(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  void record_automorphism(const Perm& from, const Perm& to) {
    Perm gamma{};
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) autos_.push_back(gamma);
  }

  static int find(std::array<int, kMaxVertices>& parent, int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  void unite_all(std::array<int, kMaxVertices>& parent, const Perm& gen) const {
    for (int v = 0; v < n_; ++v) {
      const int a = find(parent, v), b = find(parent, gen[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  // Returns the level the search should resume at; a value below the caller's
  // level aborts the caller's remaining children.
  int descend(const Partition& p) {
    const int level = static_cast<int>(path_.size());
    if (p.discrete(n_)) {
      Perm order;
      Rows rows;
      leaf_rows(p, order, rows);
      if (!have_first_) {
        have_first_ = true;
        first_order_ = best_order_ = order;
        first_rows_ = best_rows_ = rows;
        first_path_ = path_;
        return level;
      }
      if (compare_rows(rows, first_rows_) == 0) {
        record_automorphism(first_order_, order);
        int common = 0;
        while (common < level && common < static_cast<int>(first_path_.size()) &&
               path_[common] == first_path_[common]) {
          ++common;
        }
        return common;
      }
      const int cmp = compare_rows(rows, best_rows_);
      if (cmp == 0) {
        record_automorphism(best_order_, order);
      } else if (cmp > 0) {
        best_rows_ = rows;
        best_order_ = order;
      }
      return level;
    }

    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    const Mask cell = p.cells[target];

    Mask explored = 0;
    std::size_t autos_seen = 0;
    std::array<int, kMaxVertices> parent;
    bool have_orbits = false;
    for (Mask b = cell; b; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (explored && !autos_.empty()) {
        if (!have_orbits || autos_seen != autos_.size()) {
          std::iota(parent.begin(), parent.begin() + n_, 0);
          for (const auto& gen : autos_) {
            bool fixes_path = true;
            for (int u : path_) {
              if (gen[u] != u) {
                fixes_path = false;
                break;
              }
            }
            if (fixes_path) unite_all(parent, gen);
          }
          autos_seen = autos_.size();
          have_orbits = true;
        }
        const int root = find(parent, v);
        bool redundant = false;
        for (Mask e = explored; e; e &= e - 1) {
          if (find(parent, std::countr_zero(e)) == root) {
            redundant = true;
            break;
          }
        }
        if (redundant) continue;
      }
      path_.push_back(v);
      const int resume = descend(individualize(p, target, v));
      path_.pop_back();
      explored |= Mask{1} << v;
      if (resume < level) return resume;
    }
    return level;
  }

  const Graph& g_;
  const int n_;
  std::vector<int> path_;
  std::vector<int> first_path_;
  bool have_first_ = false;
  Perm first_order_{}, best_order_{};
  Rows first_rows_{}, best_rows_{};
  std::vector<Perm> autos_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const std::uint64_t> colors) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order()) {
    throw GraphError("colour vector length does not match vertex count");
  }
  return Search(g).run(colors);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace sic

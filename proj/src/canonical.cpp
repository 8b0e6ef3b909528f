#include "pivotlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "pivotlab/error.hpp"

namespace pivotlab {

namespace {

using Perm = std::array<std::int8_t, Graph::kMaxVertices>;

struct Partition {
  std::array<Mask, Graph::kMaxVertices> cells{};
  int count = 0;

  bool discrete(int n) const { return count == n; }
};

// Splits every cell by the number of neighbours in a splitter cell, subcells
// ordered by increasing count, until the partition is equitable. The result
// depends only on the graph and the cell order, never on vertex names.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.count && !changed; ++s) {
      const Mask w = p.cells[static_cast<std::size_t>(s)];
      Partition next;
      for (int c = 0; c < p.count; ++c) {
        const Mask x = p.cells[static_cast<std::size_t>(c)];
        if (popcount(x) == 1) {
          next.cells[static_cast<std::size_t>(next.count++)] = x;
          continue;
        }
        // Bucket by degree into w; at most 32 distinct values.
        std::array<Mask, Graph::kMaxVertices + 1> buckets{};
        for (Mask r = x; r; r &= r - 1) {
          const int v = std::countr_zero(r);
          buckets[static_cast<std::size_t>(popcount(g.row(v) & w))] |= bit(v);
        }
        int parts = 0;
        for (Mask b : buckets) {
          if (b) {
            next.cells[static_cast<std::size_t>(next.count++)] = b;
            ++parts;
          }
        }
        if (parts > 1) changed = true;
      }
      if (changed) p = next;
    }
  }
}

Partition individualise(const Partition& p, int cell, int v) {
  Partition q;
  for (int c = 0; c < p.count; ++c) {
    const Mask x = p.cells[static_cast<std::size_t>(c)];
    if (c == cell) {
      q.cells[static_cast<std::size_t>(q.count++)] = bit(v);
      q.cells[static_cast<std::size_t>(q.count++)] = x & ~bit(v);
    } else {
      q.cells[static_cast<std::size_t>(q.count++)] = x;
    }
  }
  return q;
}

class Searcher {
 public:
  Searcher(const Graph& g) : g_(g), n_(g.n()) {}

  void run(Partition root) {
    refine(g_, root);
    std::vector<int> path;
    search(root, path);
  }

  const Graph& best() const { return best_cert_; }
  const Perm& best_labelling() const { return best_lab_; }

 private:
  // Returns the depth at which the caller should resume: a value below the
  // caller's own depth unwinds further.
  int search(const Partition& p, std::vector<int>& path) {
    const int depth = static_cast<int>(path.size());
    if (p.discrete(n_)) return leaf(p, path);
    int target = 0;
    while (popcount(p.cells[static_cast<std::size_t>(target)]) == 1) ++target;
    const Mask cell = p.cells[static_cast<std::size_t>(target)];
    Mask explored = 0;
    for (Mask r = cell; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (equivalent_to_explored(path, v, explored)) continue;
      explored |= bit(v);
      Partition child = individualise(p, target, v);
      refine(g_, child);
      path.push_back(v);
      const int resume = search(child, path);
      path.pop_back();
      if (resume < depth) return resume;
    }
    return depth - 1;
  }

  int leaf(const Partition& p, const std::vector<int>& path) {
    Perm lab{};
    for (int c = 0; c < p.count; ++c) {
      lab[static_cast<std::size_t>(std::countr_zero(p.cells[static_cast<std::size_t>(c)]))] = static_cast<std::int8_t>(c);
    }
    const Graph cert = g_.relabelled(as_span(lab));
    const int depth = static_cast<int>(path.size());
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_cert_ = best_cert_ = cert;
      first_path_ = best_path_ = path;
      return depth - 1;
    }
    if (cert == first_cert_) {
      store_automorphism(first_lab_, lab);
      return common_prefix(path, first_path_);
    }
    const auto cmp = cert <=> best_cert_;
    if (cmp == 0) {
      store_automorphism(best_lab_, lab);
      return common_prefix(path, best_path_);
    }
    if (cmp < 0) {
      best_cert_ = cert;
      best_lab_ = lab;
      best_path_ = path;
    }
    return depth - 1;
  }

  std::span<const int> as_span(const Perm& lab) {
    tmp_.assign(lab.begin(), lab.begin() + n_);
    return tmp_;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[static_cast<std::size_t>(k)] == b[static_cast<std::size_t>(k)]) ++k;
    return k;
  }

  // Both labellings give the same relabelled graph, so v -> a^{-1}(b(v)) is
  // an automorphism.
  void store_automorphism(const Perm& a, const Perm& b) {
    Perm inv{};
    for (int v = 0; v < n_; ++v) inv[static_cast<std::size_t>(a[static_cast<std::size_t>(v)])] = static_cast<std::int8_t>(v);
    Perm gamma{};
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[static_cast<std::size_t>(v)] = inv[static_cast<std::size_t>(b[static_cast<std::size_t>(v)])];
      if (gamma[static_cast<std::size_t>(v)] != v) identity = false;
    }
    if (!identity) autos_.push_back(gamma);
  }

  // v lies in the orbit of an explored sibling under the automorphisms
  // found so far that fix every vertex on the current path.
  bool equivalent_to_explored(const std::vector<int>& path, int v, Mask explored) {
    if (!explored || autos_.empty()) return false;
    std::array<std::int8_t, Graph::kMaxVertices> parent{};
    for (int i = 0; i < n_; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    bool any = false;
    for (const auto& gamma : autos_) {
      bool fixes = true;
      for (int w : path) {
        if (gamma[static_cast<std::size_t>(w)] != w) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x);
        const int b = find(gamma[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = static_cast<std::int8_t>(std::min(a, b));
      }
    }
    if (!any) return false;
    const int root = find(v);
    for (Mask r = explored; r; r &= r - 1) {
      if (find(std::countr_zero(r)) == root) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  Perm first_lab_{};
  Perm best_lab_{};
  Graph first_cert_;
  Graph best_cert_;
  std::vector<int> first_path_;
  std::vector<int> best_path_;
  std::vector<Perm> autos_;
  std::vector<int> tmp_;
};

Partition initial_partition(const Graph& g, std::span<const Mask> cells) {
  Partition p;
  if (cells.empty()) {
    if (g.n() > 0) p.cells[static_cast<std::size_t>(p.count++)] = g.vertices();
    return p;
  }
  Mask seen = 0;
  for (Mask c : cells) {
    if (c == 0) continue;
    if ((c & seen) != 0 || (c & ~g.vertices()) != 0) throw std::invalid_argument("colour classes must partition the vertices");
    seen |= c;
    p.cells[static_cast<std::size_t>(p.count++)] = c;
  }
  if (seen != g.vertices()) throw std::invalid_argument("colour classes must cover every vertex");
  return p;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const Mask> cells) {
  CanonicalForm out;
  if (g.n() == 0) {
    out.graph = g;
    return out;
  }
  Searcher s(g);
  s.run(initial_partition(g, cells));
  out.graph = s.best();
  const auto& lab = s.best_labelling();
  out.labelling.assign(lab.begin(), lab.begin() + g.n());
  return out;
}

Graph canonical_graph(const Graph& g, std::span<const Mask> cells) { return canonical_form(g, cells).graph; }

Graph brute_force_minimum(const Graph& g, std::span<const Mask> cells) {
  const int n = g.n();
  if (n > 9) throw BudgetError("brute-force canonical form limited to n <= 9");
  const Partition p = initial_partition(g, cells);
  // Colour of each vertex, and the positions each colour must occupy.
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < p.count; ++c) {
    for (Mask r = p.cells[static_cast<std::size_t>(c)]; r; r &= r - 1) colour[static_cast<std::size_t>(std::countr_zero(r))] = c;
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  // Vertices sorted by colour: the slot block of colour c is contiguous.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)]; });
  Graph best;
  bool have = false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<int> slots = order;
  // Permute vertices within colour blocks of `slots`; slot index = position.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[static_cast<std::size_t>(slots[static_cast<std::size_t>(j)])] == colour[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  auto visit = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      for (int pos = 0; pos < n; ++pos) perm[static_cast<std::size_t>(slots[static_cast<std::size_t>(pos)])] = pos;
      Graph h = g.relabelled(perm);
      if (!have || h < best) {
        best = h;
        have = true;
      }
      return;
    }
    auto first = slots.begin() + blocks[b].first;
    auto last = slots.begin() + blocks[b].second;
    std::sort(first, last);
    do {
      self(self, b + 1);
    } while (std::next_permutation(first, last));
  };
  visit(visit, 0);
  return have ? best : g;
}

}  // namespace pivotlab

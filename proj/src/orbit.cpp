#include "pivotlab/orbit.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "pivotlab/canonical.hpp"
#include "pivotlab/error.hpp"
#include "pivotlab/parallel.hpp"

namespace pivotlab {

namespace {

constexpr int kMaxLabelledN = 7;
constexpr int kMaxUnlabelledN = 12;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller index becomes the root.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

bool in_universe(const Graph& g, Universe u) {
  switch (u) {
    case Universe::kAll: return true;
    case Universe::kConnected: return is_connected(g);
    case Universe::kBipartiteConnected: return is_connected(g) && bipartition(g).has_value();
    case Universe::kBipartiteAll: return bipartition(g).has_value();
  }
  return false;
}

void check_move_universe(Move move, Universe universe) {
  if (move == Move::kLc && is_bipartite_universe(universe)) {
    throw std::invalid_argument("LC does not preserve bipartiteness; use pivot with bipartite universes");
  }
}

// Canonical forms of the one-vertex extensions of `base`, deduplicated.
std::vector<Graph> extend_universe(const std::vector<Graph>& base, Universe universe) {
  std::vector<std::vector<Graph>> found(base.size());
  parallel_for(base.size(), 0, [&](std::size_t k) {
    const Graph& g = base[k];
    const int m = g.n();
    std::unordered_set<Graph, GraphHash> local;
    if (universe == Universe::kBipartiteConnected) {
      auto part = bipartition(g);
      for (Mask side : {part->first, part->second}) {
        for (Mask s = side; s; s = (s - 1) & side) local.insert(canonical_graph(g.extended(s)));
      }
    } else {
      const Mask first = universe == Universe::kConnected ? 1 : 0;
      for (Mask s = first; s < (Mask{1} << m); ++s) {
        const Graph h = g.extended(s);
        if (universe == Universe::kBipartiteAll && !bipartition(h)) continue;
        local.insert(canonical_graph(h));
      }
    }
    found[k].assign(local.begin(), local.end());
  });
  std::vector<Graph> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::pair<int, int> sides_sorted(const Graph& g) {
  auto part = bipartition(g);
  if (!part) return {0, 0};
  const int a = popcount(part->first);
  const int b = popcount(part->second);
  return {std::max(a, b), std::min(a, b)};
}

}  // namespace

std::string_view move_name(Move m) { return m == Move::kPivot ? "pivot" : "lc"; }

std::string_view universe_name(Universe u) {
  switch (u) {
    case Universe::kAll: return "all";
    case Universe::kConnected: return "connected";
    case Universe::kBipartiteConnected: return "bipartite-connected";
    case Universe::kBipartiteAll: return "bipartite-all";
  }
  return "?";
}

std::string_view mode_name(Mode m) { return m == Mode::kLabelled ? "labelled" : "unlabelled"; }

std::optional<Move> parse_move(std::string_view s) {
  if (s == "pivot") return Move::kPivot;
  if (s == "lc") return Move::kLc;
  return std::nullopt;
}

std::optional<Universe> parse_universe(std::string_view s) {
  for (Universe u : {Universe::kAll, Universe::kConnected, Universe::kBipartiteConnected, Universe::kBipartiteAll}) {
    if (s == universe_name(u)) return u;
  }
  return std::nullopt;
}

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "labelled") return Mode::kLabelled;
  if (s == "unlabelled") return Mode::kUnlabelled;
  return std::nullopt;
}

bool is_bipartite_universe(Universe u) {
  return u == Universe::kBipartiteConnected || u == Universe::kBipartiteAll;
}

std::vector<Graph> move_neighbours(const Graph& g, Move move, LabelSwap swap) {
  std::vector<Graph> out;
  if (move == Move::kPivot) {
    for (auto [u, v] : g.edges()) out.push_back(pivot(g, u, v, swap));
  } else {
    for (int i = 0; i < g.n(); ++i) {
      if (g.row(i)) out.push_back(local_complement(g, i));
    }
  }
  return out;
}

std::vector<Graph> unlabelled_orbit(const Graph& g, Move move, LabelSwap swap) {
  std::unordered_set<Graph, GraphHash> seen;
  std::deque<Graph> queue;
  const Graph start = canonical_graph(g);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const Graph h = queue.front();
    queue.pop_front();
    for (const Graph& nb : move_neighbours(h, move, swap)) {
      Graph c = canonical_graph(nb);
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  std::vector<Graph> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

OrbitReport orbit_report(const Graph& g, Move move, const OrbitOptions& options) {
  OrbitReport rep;
  const auto members = unlabelled_orbit(g, move, options.swap);
  rep.unlabelled_size = members.size();
  rep.representative = members.front();
  rep.min_edge_representative = members.front();
  for (const Graph& m : members) {
    if (m.edge_count() < rep.min_edge_representative.edge_count()) rep.min_edge_representative = m;
  }
  if (auto part = bipartition(rep.representative)) {
    rep.bipartite = true;
    std::tie(rep.part_a, rep.part_b) = sides_sorted(rep.representative);
  }
  if (options.labelled) {
    std::unordered_set<Graph, GraphHash> seen{g};
    std::deque<Graph> queue{g};
    while (!queue.empty()) {
      const Graph h = queue.front();
      queue.pop_front();
      for (Graph& nb : move_neighbours(h, move, options.swap)) {
        if (seen.insert(nb).second) {
          if (seen.size() > options.max_labelled) {
            throw BudgetError("labelled orbit exceeds " + std::to_string(options.max_labelled) + " graphs");
          }
          queue.push_back(std::move(nb));
        }
      }
    }
    rep.labelled_size = seen.size();
  }
  return rep;
}

const std::vector<Graph>& graphs_up_to_isomorphism(int n, Universe universe) {
  if (n < 1 || n > kMaxUnlabelledN) throw BudgetError("graph universes limited to 1 <= n <= 12");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Graph>> cache;
  const auto key = std::make_pair(n, static_cast<int>(universe));
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<Graph> result;
  if (n == 1) {
    result = {Graph(1)};
  } else {
    result = extend_universe(graphs_up_to_isomorphism(n - 1, universe), universe);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(result)).first->second;
}

int default_classify_limit(Move move, Universe universe, Mode mode) {
  const bool bip = is_bipartite_universe(universe);
  if (mode == Mode::kLabelled) return bip ? 7 : 6;
  if (bip) return 9;
  return move == Move::kLc ? 8 : 8;
}

namespace {

Classification classify_unlabelled(int n, Move move, Universe universe, const ClassifyOptions& options) {
  const auto& graphs = graphs_up_to_isomorphism(n, universe);
  std::unordered_map<Graph, std::uint32_t, GraphHash> index;
  index.reserve(graphs.size() * 2);
  for (std::uint32_t k = 0; k < graphs.size(); ++k) index.emplace(graphs[k], k);
  std::vector<std::vector<std::uint32_t>> links(graphs.size());
  parallel_for(graphs.size(), options.threads, [&](std::size_t k) {
    for (const Graph& nb : move_neighbours(graphs[k], move, options.swap)) {
      const auto it = index.find(canonical_graph(nb));
      if (it == index.end()) throw std::logic_error("move left the graph universe");
      if (it->second != k) links[k].push_back(it->second);
    }
  });
  UnionFind uf(graphs.size());
  for (std::uint32_t k = 0; k < graphs.size(); ++k) {
    for (std::uint32_t j : links[k]) uf.unite(k, j);
  }
  Classification out;
  out.n = n;
  out.universe_size = graphs.size();
  // graphs is sorted and roots are minimal indices, so roots are the least
  // canonical forms and come out in sorted order.
  std::vector<std::uint64_t> sizes(graphs.size(), 0);
  for (std::uint32_t k = 0; k < graphs.size(); ++k) ++sizes[uf.find(k)];
  for (std::uint32_t k = 0; k < graphs.size(); ++k) {
    if (uf.find(k) != k) continue;
    ++out.count;
    if (options.keep_representatives) {
      out.representatives.push_back(graphs[k]);
      out.orbit_sizes.push_back(sizes[k]);
    }
  }
  return out;
}

Classification classify_labelled(int n, Move move, Universe universe, const ClassifyOptions& options) {
  if (n > kMaxLabelledN) throw BudgetError("labelled classification limited to n <= 7");
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  std::vector<std::uint8_t> member(total, 0);
  parallel_for(total, options.threads, [&](std::size_t code) {
    member[code] = in_universe(Graph::from_edge_code(n, code), universe) ? 1 : 0;
  });
  UnionFind uf(total);
  // Moves are involutions, so linking each graph to its neighbours gives
  // the orbits exactly.
  for (std::uint64_t code = 0; code < total; ++code) {
    if (!member[code]) continue;
    const Graph g = Graph::from_edge_code(n, code);
    for (const Graph& nb : move_neighbours(g, move, options.swap)) {
      uf.unite(static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(nb.edge_code()));
    }
  }
  Classification out;
  out.n = n;
  std::vector<std::uint64_t> sizes(total, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (member[code]) {
      ++out.universe_size;
      ++sizes[uf.find(static_cast<std::uint32_t>(code))];
    }
  }
  for (std::uint64_t code = 0; code < total; ++code) {
    if (!member[code] || uf.find(static_cast<std::uint32_t>(code)) != code) continue;
    ++out.count;
    if (options.keep_representatives) {
      out.representatives.push_back(Graph::from_edge_code(n, code));
      out.orbit_sizes.push_back(sizes[code]);
    }
  }
  if (options.keep_representatives) {
    // Least member by row order; reorder both lists together.
    std::vector<std::size_t> order(out.representatives.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Graph> least(out.representatives.size());
    std::unordered_map<std::uint32_t, std::size_t> slot;
    for (std::size_t k = 0; k < out.representatives.size(); ++k) {
      slot.emplace(static_cast<std::uint32_t>(out.representatives[k].edge_code()), k);
      least[k] = out.representatives[k];
    }
    for (std::uint64_t code = 0; code < total; ++code) {
      if (!member[code]) continue;
      const std::size_t k = slot.at(uf.find(static_cast<std::uint32_t>(code)));
      const Graph g = Graph::from_edge_code(n, code);
      if (g < least[k]) least[k] = g;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return least[a] < least[b]; });
    std::vector<Graph> reps;
    std::vector<std::uint64_t> sz;
    for (std::size_t k : order) {
      reps.push_back(least[k]);
      sz.push_back(out.orbit_sizes[k]);
    }
    out.representatives = std::move(reps);
    out.orbit_sizes = std::move(sz);
  }
  return out;
}

}  // namespace

Classification classify(int n, Move move, Universe universe, Mode mode, const ClassifyOptions& options) {
  check_move_universe(move, universe);
  if (n < 1) throw RangeError("n must be at least 1");
  const int limit = options.max_n > 0 ? options.max_n : default_classify_limit(move, universe, mode);
  if (n > limit) {
    throw BudgetError(std::string(mode_name(mode)) + " " + std::string(move_name(move)) + " classification of " +
                      std::string(universe_name(universe)) + " graphs limited to n <= " + std::to_string(limit));
  }
  return mode == Mode::kLabelled ? classify_labelled(n, move, universe, options)
                                 : classify_unlabelled(n, move, universe, options);
}

std::pair<int, int> bipartite_sides(const Graph& g) {
  auto part = bipartition(g);
  if (!part) throw std::invalid_argument("graph is not bipartite");
  return {popcount(part->first), popcount(part->second)};
}

std::vector<Graph> extend_bipartite(const std::vector<Graph>& reps) {
  std::vector<Graph> out;
  for (const Graph& g : reps) {
    if (!is_connected(g)) throw std::invalid_argument("extension needs connected bipartite graphs");
    auto part = bipartition(g);
    if (!part) throw std::invalid_argument("extension needs connected bipartite graphs");
    for (Mask side : {part->first, part->second}) {
      for (Mask s = side; s; s = (s - 1) & side) out.push_back(g.extended(s));
    }
  }
  return out;
}

Classification classify_bipartite_by_extension(int n, const ClassifyOptions& options) {
  if (n < 1) throw RangeError("n must be at least 1");
  const int limit = options.max_n > 0 ? options.max_n : default_classify_limit(Move::kPivot, Universe::kBipartiteConnected, Mode::kUnlabelled);
  if (n > limit) throw BudgetError("bipartite extension classification limited to n <= " + std::to_string(limit));
  Classification cur;
  cur.n = 1;
  cur.count = 1;
  cur.representatives = {Graph(1)};
  cur.orbit_sizes = {1};
  for (int m = 2; m <= n; ++m) {
    const auto candidates = extend_bipartite(cur.representatives);
    std::vector<Graph> canon(candidates.size());
    parallel_for(candidates.size(), options.threads, [&](std::size_t k) { canon[k] = canonical_graph(candidates[k]); });
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    std::unordered_set<Graph, GraphHash> covered;
    Classification next;
    next.n = m;
    next.universe_size = canon.size();
    std::vector<std::pair<Graph, std::uint64_t>> orbits;
    for (const Graph& c : canon) {
      if (covered.count(c)) continue;
      const auto members = unlabelled_orbit(c, Move::kPivot, options.swap);
      covered.insert(members.begin(), members.end());
      orbits.emplace_back(members.front(), members.size());
    }
    std::sort(orbits.begin(), orbits.end());
    for (auto& [rep, size] : orbits) {
      next.representatives.push_back(rep);
      next.orbit_sizes.push_back(size);
    }
    next.count = orbits.size();
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::uint64_t> euler_transform(const std::vector<std::uint64_t>& i) {
  const std::size_t len = i.size();
  std::vector<std::uint64_t> t(len, 0);
  if (len == 0) return t;
  t[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    // Multiply by (1 - x^k)^{-i_k} = sum_m C(i_k + m - 1, m) x^{km}.
    std::vector<std::uint64_t> next(len, 0);
    for (std::size_t s = 0; s < len; ++s) {
      if (!t[s]) continue;
      std::uint64_t coeff = 1;
      for (std::size_t m = 0; s + k * m < len; ++m) {
        if (m > 0) coeff = coeff * (i[k] + m - 1) / m;
        next[s + k * m] += t[s] * coeff;
      }
    }
    t = std::move(next);
  }
  return t;
}

}  // namespace pivotlab

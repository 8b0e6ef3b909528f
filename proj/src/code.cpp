#include "pivotlab/code.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "pivotlab/canonical.hpp"
#include "pivotlab/error.hpp"
#include "pivotlab/orbit.hpp"
#include "pivotlab/parallel.hpp"

namespace pivotlab {

namespace {

constexpr int kMaxLength = Graph::kMaxVertices;

int rank_of(std::vector<Mask> rows) {
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == 0) continue;
    ++rank;
    const Mask low = rows[i] & (~rows[i] + 1);
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j] & low) rows[j] ^= rows[i];
  }
  return rank;
}

// Eliminate so that the columns in `cols` (increasing) carry an identity.
// Returns false when they are dependent. On success rows[i] is the row with
// its pivot in the i-th column of `cols`.
bool systematic_on(std::vector<Mask>& rows, const std::vector<int>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const Mask b = bit(cols[i]);
    std::size_t r = i;
    while (r < rows.size() && !(rows[r] & b)) ++r;
    if (r == rows.size()) return false;
    std::swap(rows[i], rows[r]);
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i && (rows[j] & b)) rows[j] ^= rows[i];
  }
  return true;
}

std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Coloured key: canonical form with the information side as first cell.
Graph coloured_canonical(const Graph& g, Mask info) {
  const std::array<Mask, 2> cells{info, g.vertices() & ~info};
  if (info == 0 || cells[1] == 0) return canonical_graph(g);
  return canonical_graph(g, cells);
}

// All coloured canonical forms reachable by pivots that keep the labels.
// Vertices 0..k-1 form the information side of every state.
std::set<Graph> coloured_orbit(const Graph& start, int k) {
  const Mask info = low_mask(k);
  std::set<Graph> seen{coloured_canonical(start, info)};
  std::vector<Graph> todo{*seen.begin()};
  while (!todo.empty()) {
    const Graph g = std::move(todo.back());
    todo.pop_back();
    for (int u = 0; u < k; ++u) {
      for (Mask r = g.row(u); r; r &= r - 1) {
        const Graph h = coloured_canonical(pivot(g, u, std::countr_zero(r), LabelSwap::kNo), info);
        if (seen.insert(h).second) todo.push_back(h);
      }
    }
  }
  return seen;
}

// Relabel so that `info` becomes 0..k-1 (order kept on both sides).
Graph info_first(const Graph& g, Mask info) {
  std::vector<int> perm(static_cast<std::size_t>(g.n()));
  int next = 0;
  for (int v : bits_of(info)) perm[static_cast<std::size_t>(v)] = next++;
  for (int v : bits_of(g.vertices() & ~info)) perm[static_cast<std::size_t>(v)] = next++;
  return g.relabelled(perm);
}

void check_length(int n) {
  if (n < 0 || n > kMaxLength) throw RangeError("code length must lie in [0, 31]");
}

}  // namespace

LinearCode::LinearCode(int n, std::vector<Mask> rows) : n_(n), rows_(std::move(rows)) {
  check_length(n);
  for (Mask r : rows_)
    if (r & ~low_mask(n)) throw RangeError("generator row names a coordinate >= n");
  if (rank_of(rows_) != k()) throw std::invalid_argument("generator rows are linearly dependent");
}

LinearCode LinearCode::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DimensionError("permutation length differs from code length");
  std::vector<Mask> out;
  out.reserve(rows_.size());
  for (Mask r : rows_) {
    Mask m = 0;
    for (int j : bits_of(r)) m |= bit(perm[static_cast<std::size_t>(j)]);
    out.push_back(m);
  }
  return LinearCode(n_, std::move(out));
}

LinearCode LinearCode::reduced() const {
  std::vector<Mask> rows = rows_;
  std::vector<int> pivots;
  std::size_t rank = 0;
  for (int c = 0; c < n_ && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && !(rows[r] & bit(c))) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != rank && (rows[j] & bit(c))) rows[j] ^= rows[rank];
    ++rank;
  }
  LinearCode out;
  out.n_ = n_;
  out.rows_ = std::move(rows);
  return out;
}

bool LinearCode::same_code(const LinearCode& other) const {
  return n_ == other.n_ && k() == other.k() && reduced().rows_ == other.reduced().rows_;
}

StandardForm standard_form(const LinearCode& c) {
  std::vector<Mask> rows = c.reduced().rows();
  StandardForm sf;
  sf.n = c.n();
  sf.k = c.k();
  Mask pivot_cols = 0;
  for (Mask r : rows) pivot_cols |= r & (~r + 1);
  sf.columns = bits_of(pivot_cols);
  for (int j : bits_of(c.n() == 0 ? 0 : low_mask(c.n()) & ~pivot_cols)) sf.columns.push_back(j);
  for (Mask r : rows) {
    Mask p = 0;
    for (int i = sf.k; i < sf.n; ++i)
      if (r & bit(sf.columns[static_cast<std::size_t>(i)])) p |= bit(i - sf.k);
    sf.p.push_back(p);
  }
  return sf;
}

LinearCode code_from_standard(const StandardForm& sf) {
  std::vector<Mask> rows;
  for (int i = 0; i < sf.k; ++i) rows.push_back(bit(i) | (sf.p[static_cast<std::size_t>(i)] << sf.k));
  return LinearCode(sf.n, std::move(rows));
}

Graph graph_from_p(int k, int n, const std::vector<Mask>& p) {
  check_length(n);
  if (k < 0 || k > n || static_cast<int>(p.size()) != k) throw DimensionError("P must have k rows with 0 <= k <= n");
  Graph g(n);
  for (int i = 0; i < k; ++i) {
    const Mask row = p[static_cast<std::size_t>(i)];
    if (row & ~low_mask(n - k)) throw RangeError("P entry outside the n-k columns");
    for (int c : bits_of(row)) g.set_edge(i, k + c, true);
  }
  return g;
}

std::vector<Mask> p_from_graph(const Graph& g, int k) {
  if (k < 0 || k > g.n()) throw RangeError("k outside [0, n]");
  std::vector<Mask> p;
  const Mask info = low_mask(k);
  for (int i = 0; i < k; ++i) {
    if (g.row(i) & info) throw std::invalid_argument("graph is not bipartite with the given partition");
    p.push_back(g.row(i) >> k);
  }
  for (int v = k; v < g.n(); ++v)
    if (g.row(v) & ~info) throw std::invalid_argument("graph is not bipartite with the given partition");
  return p;
}

Graph graph_from_code(const LinearCode& c) {
  const StandardForm sf = standard_form(c);
  return graph_from_p(sf.k, sf.n, sf.p);
}

LinearCode code_from_graph(const Graph& g, Mask info_side) {
  if (info_side & ~g.vertices()) throw RangeError("information side names a vertex >= n");
  for (int v = 0; v < g.n(); ++v) {
    const Mask same = (info_side >> v) & 1U ? info_side : g.vertices() & ~info_side;
    if (g.row(v) & same) throw std::invalid_argument("graph is not bipartite with the given partition");
  }
  std::vector<Mask> rows;
  for (int x : bits_of(info_side)) rows.push_back(bit(x) | g.row(x));
  return LinearCode(g.n(), std::move(rows));
}

bool is_information_set(const LinearCode& c, Mask cols) {
  if (std::popcount(cols) != c.k()) return false;
  std::vector<Mask> rows;
  for (Mask r : c.rows()) rows.push_back(r & cols);
  return rank_of(std::move(rows)) == c.k();
}

Graph fundamental_graph(const LinearCode& c, Mask info) {
  std::vector<Mask> rows = c.rows();
  const std::vector<int> cols = bits_of(info);
  if (static_cast<int>(cols.size()) != c.k() || !systematic_on(rows, cols))
    throw std::invalid_argument("columns do not form an information set");
  Graph g(c.n());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (int y : bits_of(rows[i] & ~info)) g.set_edge(cols[i], y, true);
  return g;
}

LinearCode dual(const LinearCode& c) {
  // From (I|P) in standard coordinates the dual is (P^T | I); map back.
  const StandardForm sf = standard_form(c);
  std::vector<Mask> rows;
  for (int j = 0; j < sf.n - sf.k; ++j) {
    Mask r = bit(sf.columns[static_cast<std::size_t>(sf.k + j)]);
    for (int i = 0; i < sf.k; ++i)
      if ((sf.p[static_cast<std::size_t>(i)] >> j) & 1U) r |= bit(sf.columns[static_cast<std::size_t>(i)]);
    rows.push_back(r);
  }
  return LinearCode(c.n(), std::move(rows));
}

std::vector<Mask> pivot_p(const std::vector<Mask>& p, int k, int n, int u, int v) {
  if (static_cast<int>(p.size()) != k || k > n) throw DimensionError("P must have k rows");
  if (u < 0 || u >= k) throw RangeError("pivot row outside [0, k)");
  if (v < k || v >= n) throw RangeError("pivot column outside [k, n)");
  const Mask col = bit(v - k);
  if (!(p[static_cast<std::size_t>(u)] & col)) throw NotAnEdgeError("P[u][v] is zero");
  std::vector<Mask> out = p;
  const Mask pivot_row = p[static_cast<std::size_t>(u)];
  for (int r = 0; r < k; ++r) {
    if (r == u || !(p[static_cast<std::size_t>(r)] & col)) continue;
    out[static_cast<std::size_t>(r)] = (p[static_cast<std::size_t>(r)] ^ pivot_row) | col;
  }
  return out;
}

Graph equivalence_key(const LinearCode& c) {
  const Graph g = graph_from_code(c);
  return *coloured_orbit(coloured_canonical(g, low_mask(c.k())), c.k()).begin();
}

bool equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n()) throw DimensionError("codes of different length");
  if (a.k() != b.k()) return false;
  return equivalence_key(a) == equivalence_key(b);
}

std::uint64_t information_set_count(const LinearCode& c) {
  if (c.k() == 0 || c.k() == c.n()) return 1;
  const StandardForm sf = standard_form(c);
  const Graph start = graph_from_p(sf.k, sf.n, sf.p);
  struct State {
    Graph g;
    Mask info;
    bool operator==(const State& o) const { return info == o.info && g == o.g; }
  };
  struct StateHash {
    std::size_t operator()(const State& s) const { return s.g.hash() * 31U + s.info; }
  };
  std::unordered_set<State, StateHash> seen{{start, low_mask(sf.k)}};
  std::vector<State> todo{{start, low_mask(sf.k)}};
  while (!todo.empty()) {
    const State s = std::move(todo.back());
    todo.pop_back();
    for (int u : bits_of(s.info)) {
      for (Mask r = s.g.row(u); r; r &= r - 1) {
        const int v = std::countr_zero(r);
        State next{pivot(s.g, u, v, LabelSwap::kYes), s.info ^ bit(u) ^ bit(v)};
        if (seen.insert(next).second) todo.push_back(std::move(next));
      }
    }
  }
  // Each information set has exactly one fundamental graph, so states and
  // information sets are in bijection.
  std::unordered_set<Mask> sets;
  for (const State& s : seen) sets.insert(s.info);
  return sets.size();
}

std::uint64_t information_set_count_brute(const LinearCode& c) {
  if (c.n() > 24) throw BudgetError("brute-force information sets limited to n <= 24");
  const int k = c.k();
  if (k == 0) return 1;
  std::uint64_t count = 0;
  // Gosper's hack over k-subsets.
  Mask s = low_mask(k);
  const Mask limit = bit(c.n());
  while (s < limit) {
    if (is_information_set(c, s)) ++count;
    const Mask lo = s & (~s + 1);
    const Mask ripple = s + lo;
    s = (((ripple ^ s) >> 2) / lo) | ripple;
  }
  return count;
}

CodeClassification classify_codes(int n, int threads) {
  if (n < 1) throw RangeError("code length must be at least 1");
  if (n > default_classify_limit(Move::kPivot, Universe::kBipartiteConnected, Mode::kUnlabelled) + 1)
    throw BudgetError("code classification limited to n <= " +
                      std::to_string(default_classify_limit(Move::kPivot, Universe::kBipartiteConnected,
                                                            Mode::kUnlabelled) + 1));
  CodeClassification out;
  out.n = n;
  if (n == 1) {
    out.orbits = 1;
    out.indecomposable = 1;
    out.per_k[1] = 1;
    out.codes.emplace_back(1, std::vector<Mask>{1});
    return out;
  }
  ClassifyOptions opts;
  opts.threads = threads;
  opts.max_n = n;
  const Classification orbits = classify_bipartite_by_extension(n, opts);
  out.orbits = orbits.count;

  struct Entry {
    int k = 0;
    Graph key;
    LinearCode code;
  };
  std::vector<std::vector<Entry>> found(orbits.representatives.size());
  std::vector<char> isodual(orbits.representatives.size(), 0);
  parallel_for(orbits.representatives.size(), threads, [&](std::size_t i) {
    const Graph& g = orbits.representatives[i];
    const Bipartition parts = *bipartition(g);
    const std::array<Mask, 2> sides{parts.first, parts.second};
    std::array<Graph, 2> keys;
    for (int s = 0; s < 2; ++s) {
      const Mask info = sides[static_cast<std::size_t>(s)];
      const int k = std::popcount(info);
      keys[static_cast<std::size_t>(s)] = *coloured_orbit(info_first(g, info), k).begin();
    }
    const bool self_paired = std::popcount(sides[0]) == std::popcount(sides[1]) && keys[0] == keys[1];
    isodual[i] = self_paired;
    for (int s = 0; s < (self_paired ? 1 : 2); ++s) {
      const Mask info = sides[static_cast<std::size_t>(s)];
      found[i].push_back({std::popcount(info), keys[static_cast<std::size_t>(s)], code_from_graph(g, info)});
    }
  });

  std::vector<Entry> all;
  for (std::size_t i = 0; i < found.size(); ++i) {
    out.isodual += static_cast<std::uint64_t>(isodual[i]);
    for (Entry& e : found[i]) all.push_back(std::move(e));
  }
  std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) {
    return a.k != b.k ? a.k < b.k : a.key < b.key;
  });
  out.indecomposable = all.size();
  for (Entry& e : all) {
    ++out.per_k[e.k];
    out.codes.push_back(std::move(e.code));
  }
  return out;
}

LinearCode parse_code_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = -1;
  int k = -1;
  if (!(in >> n >> k)) throw ParseError("code file must start with `n k`");
  if (n < 0 || n > kMaxLength) throw ParseError("code length must lie in [0, 31]");
  if (k < 0 || k > n) throw ParseError("code dimension must lie in [0, n]");
  std::vector<Mask> rows;
  for (int i = 0; i < k; ++i) {
    std::string row;
    if (!(in >> row)) throw ParseError("expected " + std::to_string(k) + " generator rows");
    if (static_cast<int>(row.size()) != n) throw ParseError("generator row " + std::to_string(i) + " has wrong length");
    Mask m = 0;
    for (int j = 0; j < n; ++j) {
      const char ch = row[static_cast<std::size_t>(j)];
      if (ch != '0' && ch != '1') throw ParseError("generator rows use only 0 and 1");
      if (ch == '1') m |= bit(j);
    }
    rows.push_back(m);
  }
  std::string extra;
  if (in >> extra) throw ParseError("unexpected trailing content in code file");
  try {
    return LinearCode(n, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_code_text(const LinearCode& c) {
  std::string out = std::to_string(c.n()) + " " + std::to_string(c.k()) + "\n";
  for (Mask r : c.rows()) {
    for (int j = 0; j < c.n(); ++j) out += (r >> j) & 1U ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace pivotlab

#include "pivotlab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "pivotlab/error.hpp"

namespace pivotlab {

namespace {

void check_n(int n) {
  if (n < 0 || n > Graph::kMaxVertices) {
    throw RangeError("vertex count " + std::to_string(n) + " outside [0, 31]");
  }
}

void check_vertex(const Graph& g, int i) {
  if (i < 0 || i >= g.n()) {
    throw RangeError("vertex " + std::to_string(i) + " outside [0, " + std::to_string(g.n()) + ")");
  }
}

void check_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (!g.has_edge(u, v)) {
    throw NotAnEdgeError(std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_n(n); }

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
    g.set_edge(u, v, true);
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(std::span<const Mask> rows) {
  Graph g(static_cast<int>(rows.size()));
  const Mask all = g.vertices();
  for (int i = 0; i < g.n_; ++i) {
    const Mask r = rows[static_cast<std::size_t>(i)];
    if (r & ~all) throw RangeError("adjacency row " + std::to_string(i) + " names a vertex >= n");
    if (r & bit(i)) throw std::invalid_argument("adjacency row " + std::to_string(i) + " has a self loop");
    g.rows_[static_cast<std::size_t>(i)] = r;
  }
  for (int i = 0; i < g.n_; ++i) {
    for (Mask r = g.row(i); r; r &= r - 1) {
      const int j = std::countr_zero(r);
      if (!(g.row(j) & bit(i))) throw std::invalid_argument("adjacency rows are not symmetric");
    }
  }
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.rows_[static_cast<std::size_t>(i)] = low_mask(n) & ~bit(i);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1, true);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.set_edge(0, n - 1, true);
  return g;
}

Graph Graph::star(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.set_edge(0, i, true);
  return g;
}

bool Graph::has_edge(int u, int v) const { return (row(u) >> v) & 1U; }

void Graph::set_edge(int u, int v, bool present) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
  auto& ru = rows_[static_cast<std::size_t>(u)];
  auto& rv = rows_[static_cast<std::size_t>(v)];
  if (present) {
    ru |= bit(v);
    rv |= bit(u);
  } else {
    ru &= ~bit(v);
    rv &= ~bit(u);
  }
}

void Graph::toggle_edge(int u, int v) { set_edge(u, v, !has_edge(u, v)); }

int Graph::edge_count() const {
  int total = 0;
  for (int i = 0; i < n_; ++i) total += degree(i);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (Mask r = row(u) & ~low_mask(u + 1); r; r &= r - 1) out.emplace_back(u, std::countr_zero(r));
  }
  return out;
}

Graph Graph::relabelled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DimensionError("permutation length must equal n");
  Mask seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n_ || (seen & bit(p))) throw std::invalid_argument("not a permutation");
    seen |= bit(p);
  }
  Graph g(n_);
  for (int i = 0; i < n_; ++i) {
    Mask out = 0;
    for (Mask r = row(i); r; r &= r - 1) out |= bit(perm[static_cast<std::size_t>(std::countr_zero(r))]);
    g.rows_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = out;
  }
  return g;
}

Graph Graph::extended(Mask nbrs) const {
  if (n_ >= kMaxVertices) throw RangeError("cannot extend a graph on 31 vertices");
  if (nbrs & ~vertices()) throw RangeError("neighbour set names a vertex >= n");
  Graph g = *this;
  g.n_ = n_ + 1;
  g.rows_[static_cast<std::size_t>(n_)] = nbrs;
  for (Mask r = nbrs; r; r &= r - 1) g.rows_[static_cast<std::size_t>(std::countr_zero(r))] |= bit(n_);
  return g;
}

std::uint64_t Graph::edge_code() const {
  if (n_ > 11) throw RangeError("edge codes limited to n <= 11");
  std::uint64_t code = 0;
  int pos = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v, ++pos) {
      if (has_edge(u, v)) code |= std::uint64_t{1} << pos;
    }
  }
  return code;
}

Graph Graph::from_edge_code(int n, std::uint64_t code) {
  if (n > 11) throw RangeError("edge codes limited to n <= 11");
  Graph g(n);
  int pos = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++pos) {
      if ((code >> pos) & 1U) {
        g.rows_[static_cast<std::size_t>(u)] |= bit(v);
        g.rows_[static_cast<std::size_t>(v)] |= bit(u);
      }
    }
  }
  return g;
}

std::size_t Graph::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
  for (int i = 0; i < n_; ++i) {
    h ^= row(i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (int i = 0; i < a.n_; ++i) {
    if (a.row(i) != b.row(i)) return a.row(i) <=> b.row(i);
  }
  return std::strong_ordering::equal;
}

Graph local_complement(const Graph& g, int i) {
  check_vertex(g, i);
  Graph out = g;
  const Mask nb = g.row(i);
  for (Mask r = nb; r; r &= r - 1) {
    const int x = std::countr_zero(r);
    out.rows_[static_cast<std::size_t>(x)] ^= nb & ~bit(x);
  }
  return out;
}

Graph pivot(const Graph& g, int u, int v, LabelSwap swap) {
  check_edge(g, u, v);
  const Mask ends = bit(u) | bit(v);
  const Mask nu = g.row(u) & ~ends;
  const Mask nv = g.row(v) & ~ends;
  const Mask a = nu & ~nv;
  const Mask b = nv & ~nu;
  const Mask c = nu & nv;
  Graph out = g;
  for (Mask r = a; r; r &= r - 1) out.rows_[static_cast<std::size_t>(std::countr_zero(r))] ^= b | c;
  for (Mask r = b; r; r &= r - 1) out.rows_[static_cast<std::size_t>(std::countr_zero(r))] ^= a | c;
  for (Mask r = c; r; r &= r - 1) out.rows_[static_cast<std::size_t>(std::countr_zero(r))] ^= a | b;
  if (swap == LabelSwap::kYes) return swap_labels(out, u, v);
  return out;
}

Graph swap_labels(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) return g;
  Graph out = g;
  std::swap(out.rows_[static_cast<std::size_t>(u)], out.rows_[static_cast<std::size_t>(v)]);
  const Mask bu = bit(u);
  const Mask bv = bit(v);
  for (int i = 0; i < g.n(); ++i) {
    Mask& r = out.rows_[static_cast<std::size_t>(i)];
    const bool hu = r & bu;
    const bool hv = r & bv;
    if (hu != hv) r ^= bu | bv;
  }
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition part;
  Mask unseen = g.vertices();
  while (unseen) {
    const int s = std::countr_zero(unseen);
    Mask side[2] = {bit(s), 0};
    Mask frontier = bit(s);
    int level = 0;
    unseen &= ~bit(s);
    while (frontier) {
      Mask next = 0;
      for (Mask r = frontier; r; r &= r - 1) next |= g.row(std::countr_zero(r));
      // An edge inside the current colour class means an odd cycle.
      if (next & side[level]) return std::nullopt;
      next &= unseen;
      unseen &= ~next;
      level ^= 1;
      side[level] |= next;
      frontier = next;
    }
    part.first |= side[0];
    part.second |= side[1];
  }
  return part;
}

std::vector<Mask> components(const Graph& g) {
  std::vector<Mask> out;
  Mask unseen = g.vertices();
  while (unseen) {
    Mask comp = bit(std::countr_zero(unseen));
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask r = frontier; r; r &= r - 1) next |= g.row(std::countr_zero(r));
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

namespace {

void clique_search(const Graph& g, int size, Mask cand, int& best) {
  if (cand == 0) {
    best = std::max(best, size);
    return;
  }
  while (cand) {
    if (size + popcount(cand) <= best) return;
    const int v = std::countr_zero(cand);
    cand &= ~bit(v);
    clique_search(g, size + 1, cand & g.row(v), best);
  }
  best = std::max(best, size);
}

}  // namespace

int max_clique_size(const Graph& g) {
  int best = 0;
  clique_search(g, 0, g.vertices(), best);
  return best;
}

bool is_clique(const Graph& g, Mask vertices) {
  for (Mask r = vertices; r; r &= r - 1) {
    const int i = std::countr_zero(r);
    if ((vertices & ~(g.row(i) | bit(i))) != 0) return false;
  }
  return true;
}

Graph induced_subgraph(const Graph& g, Mask vertices) {
  if (vertices & ~g.vertices()) throw RangeError("vertex set names a vertex >= n");
  std::vector<int> keep;
  for (Mask r = vertices; r; r &= r - 1) keep.push_back(std::countr_zero(r));
  std::vector<Mask> rows(keep.size(), 0);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (g.has_edge(keep[a], keep[b])) rows[a] |= bit(static_cast<int>(b));
    }
  }
  return Graph::from_rows(rows);
}

BooleanFunction to_anf(const Graph& g) {
  std::vector<Mask> terms;
  for (auto [u, v] : g.edges()) terms.push_back(bit(u) | bit(v));
  return BooleanFunction(g.n(), std::move(terms));
}

Graph graph_from_anf(const BooleanFunction& f) {
  if (f.degree() > 2) throw std::invalid_argument("a graph needs an ANF of degree <= 2");
  Graph g(f.n());
  for (Mask t : f.terms()) {
    if (popcount(t) == 2) g.set_edge(std::countr_zero(t), 31 - std::countl_zero(t), true);
  }
  return g;
}

CliquePrediction clique_split_predict(const Graph& g, Mask clique, int u, int v) {
  check_edge(g, u, v);
  if (clique & ~g.vertices()) throw RangeError("clique names a vertex >= n");
  if (!is_clique(g, clique)) throw std::invalid_argument("vertex set is not a clique");
  CliquePrediction p;
  const int r = popcount(clique);
  const bool in_u = clique & bit(u);
  const bool in_v = clique & bit(v);
  if (in_u && in_v) {
    p.kind = CliqueCase::kBothInside;
    p.cliques = {clique};
    p.sizes = {r};
    return p;
  }
  if (in_u || in_v) {
    // a inside the clique, b outside.
    const int a = in_u ? u : v;
    const int b = in_u ? v : u;
    const Mask m = clique & g.row(a) & g.row(b);
    const Mask q = clique & ~m & ~bit(a);
    p.kind = CliqueCase::kOneInside;
    p.split_a = m;
    p.split_b = q;
    // After the swap the label b carries a's old neighbourhood and a carries b's.
    p.cliques = {q | bit(b), m | bit(a) | bit(b)};
    p.sizes = {r - popcount(m), popcount(m) + 2};
    return p;
  }
  const Mask ends = bit(u) | bit(v);
  const Mask nu = g.row(u) & ~ends;
  const Mask nv = g.row(v) & ~ends;
  const int classes = ((clique & nu & ~nv) != 0) + ((clique & nv & ~nu) != 0) + ((clique & nu & nv) != 0);
  p.kind = CliqueCase::kNeitherInside;
  p.cliques = {clique};
  p.sizes = {r};
  p.exact = classes <= 1;
  return p;
}

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (n < 0) {
      if (line.rfind("n=", 0) != 0) throw ParseError("graph text must start with n=<int>");
      const char* b = line.data() + 2;
      const char* e = line.data() + line.size();
      auto [ptr, ec] = std::from_chars(b, e, n);
      if (ec != std::errc{} || ptr != e) throw ParseError("bad vertex count on line " + std::to_string(line_no));
      if (n < 0 || n > Graph::kMaxVertices) throw ParseError("vertex count outside [0, 31]");
      continue;
    }
    std::istringstream ls(line);
    int u = 0;
    int v = 0;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest)) throw ParseError("bad edge line " + std::to_string(line_no));
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("edge on line " + std::to_string(line_no) + " is out of range or a loop");
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("graph text must start with n=<int>");
  return Graph::from_edges(n, edges);
}

std::string format_graph_text(const Graph& g) {
  std::string out = "n=" + std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace {

int hex_width(int n) { return std::max(1, (n + 3) / 4); }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Graph parse_hex_rows(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("hex rows need '<n>:'");
  int n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + colon, n);
  if (ec != std::errc{} || ptr != text.data() + colon) throw ParseError("bad vertex count in hex rows");
  if (n < 0 || n > Graph::kMaxVertices) throw ParseError("vertex count outside [0, 31]");
  std::vector<Mask> rows;
  std::string_view body = text.substr(colon + 1);
  if (n == 0) {
    if (!body.empty()) throw ParseError("hex rows for n=0 must be empty");
    return Graph(0);
  }
  const int width = hex_width(n);
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      if (pos >= body.size() || body[pos] != ',') throw ParseError("expected ',' between hex rows");
      ++pos;
    }
    if (pos + static_cast<std::size_t>(width) > body.size()) throw ParseError("hex row too short");
    Mask r = 0;
    for (int d = 0; d < width; ++d) {
      const int h = hex_value(body[pos + static_cast<std::size_t>(d)]);
      if (h < 0) throw ParseError("bad hex digit in row " + std::to_string(i));
      r |= static_cast<Mask>(h) << (4 * d);
    }
    pos += static_cast<std::size_t>(width);
    rows.push_back(r);
  }
  if (pos != body.size()) throw ParseError("trailing characters after hex rows");
  try {
    return Graph::from_rows(rows);
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("invalid hex rows: ") + e.what());
  }
}

std::string format_hex_rows(const Graph& g) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = std::to_string(g.n()) + ":";
  const int width = hex_width(g.n());
  for (int i = 0; i < g.n(); ++i) {
    if (i) out += ',';
    const Mask r = g.row(i);
    for (int d = 0; d < width; ++d) out += kDigits[(r >> (4 * d)) & 0xFU];
  }
  return out;
}

}  // namespace pivotlab

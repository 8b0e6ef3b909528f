#pragma once

// Simple undirected graphs on n <= 31 vertices, one adjacency bitmask per
// vertex, with local complementation and pivot (edge-local complementation).

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pivotlab/anf.hpp"

namespace pivotlab {

// Whether pivot exchanges the labels of the two edge endpoints afterwards.
// Yes: the toggle-then-swap convention, equal to LC(u) LC(v) LC(u).
// No: Bouchet's complementation along an edge, toggles only.
enum class LabelSwap : bool { kNo = false, kYes = true };

class Graph {
 public:
  static constexpr int kMaxVertices = 31;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  // Validates symmetry and the zero diagonal.
  static Graph from_rows(std::span<const Mask> rows);
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int n);

  int n() const { return n_; }
  Mask row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  std::span<const Mask> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }
  Mask vertices() const { return low_mask(n_); }

  bool has_edge(int u, int v) const;
  void set_edge(int u, int v, bool present);
  void toggle_edge(int u, int v);
  int degree(int i) const { return popcount(row(i)); }
  int edge_count() const;
  // Lexicographic (u < v).
  std::vector<std::pair<int, int>> edges() const;
  // Vertex v becomes perm[v].
  Graph relabelled(std::span<const int> perm) const;
  // Graph with one extra vertex n joined to `nbrs`.
  Graph extended(Mask nbrs) const;
  // 64-bit edge index over the upper triangle, bit position of (u,v) in
  // row-major order; only for n <= 11.
  std::uint64_t edge_code() const;
  static Graph from_edge_code(int n, std::uint64_t code);

  std::size_t hash() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b);

 private:
  friend Graph local_complement(const Graph& g, int i);
  friend Graph pivot(const Graph& g, int u, int v, LabelSwap swap);
  friend Graph swap_labels(const Graph& g, int u, int v);

  int n_ = 0;
  std::array<Mask, kMaxVertices> rows_{};
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const { return g.hash(); }
};

// Complements the subgraph induced on N(i).
Graph local_complement(const Graph& g, int i);

// Pivot on the edge uv: toggles every pair drawn from two different classes
// among N(u)\N(v), N(v)\N(u) and N(u)&N(v) (endpoints excluded), then
// optionally exchanges the labels u and v. Throws NotAnEdgeError.
Graph pivot(const Graph& g, int u, int v, LabelSwap swap = LabelSwap::kYes);

// Exchanges the labels of u and v.
Graph swap_labels(const Graph& g, int u, int v);

struct Bipartition {
  Mask first = 0;
  Mask second = 0;
};

// 2-colouring by BFS; the lowest vertex of each component goes to `first`.
std::optional<Bipartition> bipartition(const Graph& g);
// Components ordered by their lowest vertex.
std::vector<Mask> components(const Graph& g);
bool is_connected(const Graph& g);
int max_clique_size(const Graph& g);
bool is_clique(const Graph& g, Mask vertices);
Graph induced_subgraph(const Graph& g, Mask vertices);

// The quadratic form sum_{ij in E} x_i x_j.
BooleanFunction to_anf(const Graph& g);
// Reads the quadratic terms of f; affine terms are ignored. Throws when
// deg(f) > 2.
Graph graph_from_anf(const BooleanFunction& f);

enum class CliqueCase { kBothInside, kOneInside, kNeitherInside };

struct CliquePrediction {
  CliqueCase kind = CliqueCase::kNeitherInside;
  // Vertex sets expected to be cliques after pivot(g, u, v, LabelSwap::kYes).
  std::vector<Mask> cliques;
  std::vector<int> sizes;
  // For kOneInside: the part of the clique that loses its edges to `split_b`.
  Mask split_a = 0;
  Mask split_b = 0;
  // False when neither endpoint lies in the clique but the clique meets two
  // of the toggled neighbourhood classes; the pair between them is toggled
  // and the invariance statement does not hold there.
  bool exact = true;
};

// Clique sizes after pivoting on uv, by the three-case analysis: both
// endpoints inside (invariant), one inside (splits into r-m and m+2 with m
// the clique vertices adjacent to both endpoints), neither inside
// (invariant).
CliquePrediction clique_split_predict(const Graph& g, Mask clique, int u, int v);

// Text format: "n=<int>" then one "u v" line per edge (u < v), lexicographic.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph& g);

// Representative format "<n>:<row0>,<row1>,..."; each row is written with
// ceil(n/4) hex digits, least significant nibble first (vertex 0 in the low
// bit of the first digit).
Graph parse_hex_rows(std::string_view text);
std::string format_hex_rows(const Graph& g);

}  // namespace pivotlab

#pragma once

// Binary linear codes and their bipartite graphs.
//
// A generator row is a word with bit j for coordinate j. For an information
// set X, the fundamental graph joins x in X to y outside X when the
// systematic generator (identity on X) has a 1 in row x, column y.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pivotlab/graph.hpp"

namespace pivotlab {

class LinearCode {
 public:
  LinearCode() = default;
  // Throws when the rows are linearly dependent or name coordinates >= n.
  LinearCode(int n, std::vector<Mask> rows);

  int n() const { return n_; }
  int k() const { return static_cast<int>(rows_.size()); }
  const std::vector<Mask>& rows() const { return rows_; }
  bool bit_at(int row, int col) const { return (rows_[static_cast<std::size_t>(row)] >> col) & 1U; }

  // Coordinates permuted: new coordinate perm[j] holds old coordinate j.
  LinearCode permuted(const std::vector<int>& perm) const;
  // Reduced row echelon generator; equal for equal codes.
  LinearCode reduced() const;
  bool same_code(const LinearCode& other) const;

 private:
  int n_ = 0;
  std::vector<Mask> rows_;
};

struct StandardForm {
  int n = 0;
  int k = 0;
  // k rows of n-k bits; bit c of row i is entry (i, c) of P.
  std::vector<Mask> p;
  // columns[i] is the original coordinate placed at position i: the k
  // pivot columns in order, then the remaining columns in increasing order.
  std::vector<int> columns;
};

// Gaussian elimination with column pivoting to (I | P).
StandardForm standard_form(const LinearCode& c);
// The code generated by (I | P) in standard coordinates.
LinearCode code_from_standard(const StandardForm& sf);

// Bipartite graph on n vertices: rows 0..k-1, columns k..n-1, edges from P.
Graph graph_from_p(int k, int n, const std::vector<Mask>& p);
std::vector<Mask> p_from_graph(const Graph& g, int k);
// The graph of the standard form, in standard coordinates.
Graph graph_from_code(const LinearCode& c);
// Generator rows e_x + N(x) for x in the information side, coordinates = vertices.
LinearCode code_from_graph(const Graph& g, Mask info_side);
// Throws when `info` is not an information set.
Graph fundamental_graph(const LinearCode& c, Mask info);
bool is_information_set(const LinearCode& c, Mask cols);

LinearCode dual(const LinearCode& c);

// Lemma-style pivot on P: store column v, add row u to every other row with
// a 1 in column v, restore column v. u is a row index (< k) and v a vertex
// label in [k, n). Equals the P block of pivot(graph, u, v, LabelSwap::kNo).
std::vector<Mask> pivot_p(const std::vector<Mask>& p, int k, int n, int u, int v);

// Least canonical form over the coloured pivot orbit of (fundamental graph,
// information side). Two codes of equal (n, k) are equivalent iff their
// keys are equal.
Graph equivalence_key(const LinearCode& c);
bool equivalent(const LinearCode& a, const LinearCode& b);

// Information sets found as the orbit of (graph, information side) under
// pivot with label swap, the side becoming X xor {u, v}.
std::uint64_t information_set_count(const LinearCode& c);
// k-subsets of columns of full rank; n <= 24.
std::uint64_t information_set_count_brute(const LinearCode& c);

struct CodeClassification {
  int n = 0;
  // Connected bipartite pivot orbits on n vertices.
  std::uint64_t orbits = 0;
  std::uint64_t indecomposable = 0;
  std::uint64_t isodual = 0;
  std::map<int, std::uint64_t> per_k;
  // One code per equivalence class, sorted by (k, key).
  std::vector<LinearCode> codes;
};

CodeClassification classify_codes(int n, int threads = 0);

// "n k" followed by k lines of n characters from {0,1}; character j of a
// row is coordinate j.
LinearCode parse_code_text(std::string_view text);
std::string format_code_text(const LinearCode& c);

}  // namespace pivotlab

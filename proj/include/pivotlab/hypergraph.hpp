#pragma once

// Hypergraphs as Boolean functions with the affine part stripped, and the
// hypergraph pivot p + (x_u + x_v)(N_u + N_v) + N_u N_v.

#include "pivotlab/anf.hpp"
#include "pivotlab/graph.hpp"

namespace pivotlab {

class Hypergraph {
 public:
  Hypergraph() = default;
  // Drops constant and linear terms.
  explicit Hypergraph(const BooleanFunction& f) : f_(strip_affine(f)) {}

  int n() const { return f_.n(); }
  const BooleanFunction& anf() const { return f_; }
  std::span<const Mask> edges() const { return f_.terms(); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  BooleanFunction f_;
};

// x_u x_v is a term of p and not a multiplying term of p - x_u x_v.
bool is_admissible_edge(const BooleanFunction& p, int u, int v);

// N_u with the x_v term removed (x_u x_v contributes to neither side).
BooleanFunction edge_neighbourhood(const BooleanFunction& p, int u, int v);

// The full pivot p + (x_u+x_v)(N_u+N_v) + N_u N_v, affine terms kept.
// Throws InadmissibleEdgeError.
BooleanFunction pivot_anf(const BooleanFunction& p, int u, int v);

Hypergraph hyper_pivot(const Hypergraph& h, int u, int v);

}  // namespace pivotlab

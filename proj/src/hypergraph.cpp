#include "pivotlab/hypergraph.hpp"

#include <string>

#include "pivotlab/error.hpp"

namespace pivotlab {

namespace {

void check_pair(const BooleanFunction& p, int u, int v) {
  if (u < 0 || v < 0 || u >= p.n() || v >= p.n()) throw RangeError("pivot vertex out of range");
  if (u == v) throw InadmissibleEdgeError("pivot endpoints must differ");
}

}  // namespace

bool is_admissible_edge(const BooleanFunction& p, int u, int v) {
  check_pair(p, u, v);
  const Monomial e(bit(u) | bit(v));
  if (!contains_term(p, e)) return false;
  return !is_multiplying_term(p + BooleanFunction::monomial(p.n(), e), e);
}

BooleanFunction edge_neighbourhood(const BooleanFunction& p, int u, int v) {
  check_pair(p, u, v);
  BooleanFunction nu = neighbourhood(p, u);
  if (contains_term(nu, Monomial(bit(v)))) nu += BooleanFunction::variable(p.n(), v);
  return nu;
}

BooleanFunction pivot_anf(const BooleanFunction& p, int u, int v) {
  if (!is_admissible_edge(p, u, v)) {
    throw InadmissibleEdgeError("x" + std::to_string(u) + "*x" + std::to_string(v) +
                                " is not an admissible pivot edge");
  }
  const int n = p.n();
  const BooleanFunction nu = edge_neighbourhood(p, u, v);
  const BooleanFunction nv = edge_neighbourhood(p, v, u);
  const BooleanFunction xs = BooleanFunction::variable(n, u) + BooleanFunction::variable(n, v);
  return p + xs * (nu + nv) + nu * nv;
}

Hypergraph hyper_pivot(const Hypergraph& h, int u, int v) { return Hypergraph(pivot_anf(h.anf(), u, v)); }

}  // namespace pivotlab

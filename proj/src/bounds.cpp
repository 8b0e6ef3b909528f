#include "pivotlab/bounds.hpp"

#include <bit>
#include <deque>
#include <stdexcept>
#include <string>

#include "pivotlab/error.hpp"

namespace pivotlab {

ComponentBound component_bound(const Graph& g, Family family, int threads) {
  if (family == Family::HN) throw std::invalid_argument("component bounds are defined for IH and IHN");
  FlatCountOptions opts;
  opts.threads = threads;
  ComponentBound out;
  for (Mask comp : components(g)) {
    const std::uint64_t c = count_flat_quadratic(induced_subgraph(g, comp), family, opts).count;
    out.per_component.push_back(c);
    out.bound *= c;
  }
  out.actual = count_flat_quadratic(g, family, opts).count;
  return out;
}

int clique_upper_bound(std::uint64_t k_ih) {
  if (k_ih == 0) throw std::invalid_argument("flat count must be positive");
  return 63 - std::countl_zero(k_ih);
}

std::uint64_t family_ih_bound(int n, int t) {
  return static_cast<std::uint64_t>(t + 1) << (n - t - 1);
}

std::uint64_t family_ihn_bound(int n, int t) {
  return static_cast<std::uint64_t>(n + 1) * family_ih_bound(n, t);
}

FamilyCounts family_flat_counts(int n, int t, const BooleanFunction& h, bool with_ihn, int threads) {
  const BooleanFunction f = family_member(n, t, h, BooleanFunction(n));
  FlatCountOptions opts;
  opts.threads = threads;
  FamilyCounts out;
  out.ih_bound = family_ih_bound(n, t);
  out.ihn_bound = family_ihn_bound(n, t);
  out.ih_count = count_flat(f, Family::IH, opts).count;
  if (with_ihn) out.ihn_count = count_flat(f, Family::IHN, opts).count;
  return out;
}

CorollaryAuditRow audit_clique_corollary(int n) {
  if (n < 1 || n > 7) throw BudgetError("corollary audit limited to 1 <= n <= 7");
  CorollaryAuditRow row;
  row.n = n;
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  std::vector<bool> seen(total, false);
  for (std::uint64_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++row.orbits;
    seen[start] = true;
    std::deque<Graph> queue{Graph::from_edge_code(n, start)};
    const Graph first = queue.front();
    int best = 0;
    Graph best_graph = first;
    while (!queue.empty()) {
      const Graph g = queue.front();
      queue.pop_front();
      const int c = max_clique_size(g);
      if (c > best) {
        best = c;
        best_graph = g;
      }
      for (auto [u, v] : g.edges()) {
        const Graph h = pivot(g, u, v, LabelSwap::kYes);
        const std::uint64_t code = h.edge_code();
        if (!seen[code]) {
          seen[code] = true;
          queue.push_back(h);
        }
      }
    }
    const std::uint64_t k = count_flat_quadratic(first, Family::IH, FlatCountOptions{1, 0, 0}).count;
    if (best > clique_upper_bound(k)) {
      ++row.violations;
      if (!row.example || best > row.example_clique) {
        row.example = best_graph;
        row.example_clique = best;
        row.example_k_ih = k;
      }
    }
  }
  return row;
}

}  // namespace pivotlab

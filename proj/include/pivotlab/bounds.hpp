#pragma once

// Lower bounds on flat-spectrum counts from graph structure, the clique-size
// corollary audit, and the counts of the high-flatness family.

#include <cstdint>
#include <optional>
#include <vector>

#include "pivotlab/anf.hpp"
#include "pivotlab/graph.hpp"
#include "pivotlab/spectral.hpp"

namespace pivotlab {

struct ComponentBound {
  std::uint64_t bound = 1;
  std::uint64_t actual = 0;
  std::vector<std::uint64_t> per_component;
};

// Product of the flat counts of the connected components (rank criterion),
// next to the count of the whole graph. family is IH or IHN.
ComponentBound component_bound(const Graph& g, Family family, int threads = 0);

// floor(log2 k_ih); k_ih must be positive.
int clique_upper_bound(std::uint64_t k_ih);

struct FamilyCounts {
  std::uint64_t ih_count = 0;
  std::uint64_t ih_bound = 0;
  // Present when the IHN sweep was requested.
  std::optional<std::uint64_t> ihn_count;
  std::uint64_t ihn_bound = 0;
};

// (t+1) 2^{n-t-1}.
std::uint64_t family_ih_bound(int n, int t);
// (n+1)(t+1) 2^{n-t-1}.
std::uint64_t family_ihn_bound(int n, int t);

// Direct counts for family_member(n, t, h, 0).
FamilyCounts family_flat_counts(int n, int t, const BooleanFunction& h, bool with_ihn, int threads = 0);

struct CorollaryAuditRow {
  int n = 0;
  std::uint64_t orbits = 0;
  std::uint64_t violations = 0;
  // One violating orbit member with the largest clique, if any.
  std::optional<Graph> example;
  int example_clique = 0;
  std::uint64_t example_k_ih = 0;
};

// For every labelled pivot orbit of graphs on n vertices, compares the largest
// clique over the orbit with floor(log2 K_IH). Reports, never asserts.
CorollaryAuditRow audit_clique_corollary(int n);

}  // namespace pivotlab

#pragma once

// Canonical forms of graphs by individualisation and refinement.
//
// The canonical graph is the smallest relabelled adjacency (rows compared
// lexicographically) over the leaves of the search tree, so two graphs get
// the same canonical graph iff they are isomorphic. It is not in general
// the minimum over all n! relabellings.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pivotlab/graph.hpp"

namespace pivotlab {

struct CanonicalForm {
  Graph graph;
  // labelling[v] is the canonical position of vertex v.
  std::vector<int> labelling;

  std::string hex() const { return format_hex_rows(graph); }
};

// `cells` is an optional ordered colouring: every vertex must lie in exactly
// one cell, and relabellings may only map a vertex within its own cell.
// Vertices of cell 0 receive the lowest canonical positions.
CanonicalForm canonical_form(const Graph& g, std::span<const Mask> cells = {});
Graph canonical_graph(const Graph& g, std::span<const Mask> cells = {});

// Minimum over all relabellings preserving the colouring; n <= 9.
Graph brute_force_minimum(const Graph& g, std::span<const Mask> cells = {});

}  // namespace pivotlab

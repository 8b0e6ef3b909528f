#pragma once

// Pivot and LC orbits of graphs, labelled and up to isomorphism, and the
// classification of whole graph universes into orbits.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pivotlab/graph.hpp"

namespace pivotlab {

enum class Move { kPivot, kLc };
enum class Universe { kAll, kConnected, kBipartiteConnected, kBipartiteAll };
enum class Mode { kLabelled, kUnlabelled };

std::string_view move_name(Move m);
std::string_view universe_name(Universe u);
std::string_view mode_name(Mode m);
std::optional<Move> parse_move(std::string_view s);
std::optional<Universe> parse_universe(std::string_view s);
std::optional<Mode> parse_mode(std::string_view s);

bool is_bipartite_universe(Universe u);

// All graphs reachable by one move: pivot on every edge, or LC at every vertex.
std::vector<Graph> move_neighbours(const Graph& g, Move move, LabelSwap swap = LabelSwap::kYes);

struct OrbitOptions {
  LabelSwap swap = LabelSwap::kYes;
  // Upper limit on the labelled orbit size; BudgetError beyond it.
  std::size_t max_labelled = 5'000'000;
  bool labelled = true;
};

struct OrbitReport {
  // Isomorphism classes met in the orbit.
  std::size_t unlabelled_size = 0;
  // Distinct labelled graphs reachable from the input (0 when not requested).
  std::size_t labelled_size = 0;
  // Least canonical form in the orbit.
  Graph representative;
  // Canonical member with the fewest edges (ties: least canonical form).
  Graph min_edge_representative;
  bool bipartite = false;
  // Colour class sizes of the representative, larger first.
  int part_a = 0;
  int part_b = 0;
};

OrbitReport orbit_report(const Graph& g, Move move, const OrbitOptions& options = {});
inline OrbitReport pivot_orbit(const Graph& g, const OrbitOptions& options = {}) {
  return orbit_report(g, Move::kPivot, options);
}
inline OrbitReport lc_orbit(const Graph& g, const OrbitOptions& options = {}) {
  return orbit_report(g, Move::kLc, options);
}

// Canonical forms of the members of the unlabelled orbit, sorted.
std::vector<Graph> unlabelled_orbit(const Graph& g, Move move, LabelSwap swap = LabelSwap::kYes);

// Canonical forms of every graph of the universe on n vertices, sorted.
// Built by one-vertex extension from n-1 with canonical deduplication, and
// cached per (n, universe).
const std::vector<Graph>& graphs_up_to_isomorphism(int n, Universe universe);

// Default size ceilings (largest n) per configuration.
int default_classify_limit(Move move, Universe universe, Mode mode);

struct ClassifyOptions {
  int threads = 0;
  LabelSwap swap = LabelSwap::kYes;
  // 0 uses default_classify_limit.
  int max_n = 0;
  bool keep_representatives = true;
};

struct Classification {
  int n = 0;
  std::uint64_t universe_size = 0;
  std::uint64_t count = 0;
  // One per orbit, sorted: least canonical form (unlabelled mode) or least
  // labelled member (labelled mode).
  std::vector<Graph> representatives;
  // Number of universe members in each orbit, aligned with representatives.
  std::vector<std::uint64_t> orbit_sizes;
};

Classification classify(int n, Move move, Universe universe, Mode mode, const ClassifyOptions& options = {});

// Bipartition sizes of a connected bipartite graph: (side of vertex 0, other side).
std::pair<int, int> bipartite_sides(const Graph& g);

// For each graph, one new vertex joined to every nonempty subset of one colour
// class: 2^a + 2^b - 2 graphs per input on a + b vertices.
std::vector<Graph> extend_bipartite(const std::vector<Graph>& reps);

// Connected bipartite pivot orbits on n vertices found from the extensions
// of the (n-1)-vertex representatives, recursively from the single vertex.
// Representatives are least canonical forms, sorted.
Classification classify_bipartite_by_extension(int n, const ClassifyOptions& options = {});

// t_n from i_n: number of multisets of connected classes with total size n.
// i[k] is the count for size k (i[0] ignored); returns t[0..i.size()-1].
std::vector<std::uint64_t> euler_transform(const std::vector<std::uint64_t>& i);

}  // namespace pivotlab

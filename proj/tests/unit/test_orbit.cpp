#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pivotlab/canonical.hpp"
#include "pivotlab/error.hpp"
#include "pivotlab/orbit.hpp"

using namespace pivotlab;

namespace {

std::uint64_t labelled_universe(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

int automorphisms(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do count += g.relabelled(perm) == g;
  while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

}  // namespace

TEST(Canonical, ClassesMatchBruteForceExhaustively) {
  for (int n = 1; n <= 6; ++n) {
    std::map<Graph, Graph> brute_to_canon;
    std::map<Graph, Graph> canon_to_brute;
    for (std::uint64_t c = 0; c < labelled_universe(n); ++c) {
      const Graph g = Graph::from_edge_code(n, c);
      const CanonicalForm f = canonical_form(g);
      ASSERT_EQ(g.relabelled(f.labelling), f.graph);
      const Graph b = brute_force_minimum(g);
      const auto [it, fresh] = brute_to_canon.emplace(b, f.graph);
      ASSERT_EQ(it->second, f.graph) << format_hex_rows(g);
      const auto [jt, fresh2] = canon_to_brute.emplace(f.graph, b);
      ASSERT_EQ(jt->second, b) << format_hex_rows(g);
    }
    // Number of isomorphism classes: 1, 2, 4, 11, 34, 156.
    const std::vector<std::size_t> classes{0, 1, 2, 4, 11, 34, 156};
    EXPECT_EQ(brute_to_canon.size(), classes[static_cast<std::size_t>(n)]);
  }
}

TEST(Canonical, RandomRelabellingsAtSevenAndEight) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 7 + static_cast<int>(trial % 2);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1U) g.set_edge(u, v, true);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(canonical_graph(g), canonical_graph(g.relabelled(perm)));
    if (trial < 40) ASSERT_EQ(brute_force_minimum(g), brute_force_minimum(g.relabelled(perm)));
  }
}

TEST(Canonical, ColouredCellsRestrictRelabelling) {
  // P3 with the centre coloured apart from the ends vs an end coloured apart.
  const Graph p3 = Graph::path(3);
  const std::vector<Mask> centre{bit(1), bit(0) | bit(2)};
  const std::vector<Mask> end{bit(0), bit(1) | bit(2)};
  EXPECT_NE(canonical_graph(p3, centre), canonical_graph(p3, end));
  const Graph other = Graph::from_edges(3, {{0, 2}, {1, 2}});
  const std::vector<Mask> other_end{bit(1), bit(0) | bit(2)};
  EXPECT_EQ(canonical_graph(p3, end), canonical_graph(other, other_end));

  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1U) g.set_edge(u, v, true);
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const std::vector<Mask> cells{low_mask(k), low_mask(n) & ~low_mask(k)};
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.begin() + k, rng);
    std::shuffle(perm.begin() + k, perm.end(), rng);
    ASSERT_EQ(canonical_graph(g, cells), canonical_graph(g.relabelled(perm), cells));
    ASSERT_EQ(brute_force_minimum(g, cells), brute_force_minimum(g.relabelled(perm), cells));
  }
}

TEST(Orbit, Examples) {
  const OrbitReport k3 = pivot_orbit(Graph::complete(3));
  EXPECT_EQ(k3.unlabelled_size, 1U);
  EXPECT_EQ(k3.labelled_size, 1U);
  EXPECT_EQ(pivot_orbit(Graph::star(4)).labelled_size, 4U);

  const auto lc = unlabelled_orbit(Graph::path(3), Move::kLc);
  EXPECT_TRUE(std::find(lc.begin(), lc.end(), canonical_graph(Graph::complete(3))) != lc.end());
  EXPECT_EQ(lc.size(), 2U);

  const OrbitReport p4 = pivot_orbit(Graph::path(4));
  EXPECT_TRUE(p4.bipartite);
  EXPECT_EQ(p4.part_a, 2);
  EXPECT_EQ(p4.part_b, 2);
  EXPECT_GE(p4.labelled_size, p4.unlabelled_size);

  OrbitOptions small;
  small.max_labelled = 2;
  EXPECT_THROW(pivot_orbit(Graph::path(5), small), BudgetError);
}

TEST(Orbit, ClosedUnderMoves) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1U) g.set_edge(u, v, true);
    for (Move move : {Move::kPivot, Move::kLc}) {
      const auto members = unlabelled_orbit(g, move);
      const std::set<Graph> set(members.begin(), members.end());
      for (const Graph& m : members)
        for (const Graph& nb : move_neighbours(m, move)) ASSERT_TRUE(set.count(canonical_graph(nb)));
    }
  }
}

TEST(Orbit, ClassifyExamples) {
  EXPECT_EQ(classify(3, Move::kPivot, Universe::kAll, Mode::kUnlabelled).count, 4U);
  EXPECT_EQ(classify(4, Move::kPivot, Universe::kConnected, Mode::kLabelled).count, 11U);
  EXPECT_EQ(classify(6, Move::kPivot, Universe::kBipartiteConnected, Mode::kUnlabelled).count, 8U);
  EXPECT_EQ(classify(6, Move::kLc, Universe::kConnected, Mode::kUnlabelled).count, 11U);
  EXPECT_EQ(classify(7, Move::kPivot, Universe::kConnected, Mode::kUnlabelled).count, 134U);
  EXPECT_THROW(classify(7, Move::kPivot, Universe::kAll, Mode::kLabelled), BudgetError);
}

TEST(Orbit, IsomorphismClassCounts) {
  // Connected graphs: 1, 1, 2, 6, 21, 112, 853.
  const std::vector<std::size_t> connected{0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n)
    EXPECT_EQ(graphs_up_to_isomorphism(n, Universe::kConnected).size(), connected[static_cast<std::size_t>(n)]);
  EXPECT_EQ(graphs_up_to_isomorphism(6, Universe::kAll).size(), 156U);
}

TEST(Orbit, LcOrbitsSplitIntoPivotOrbits) {
  for (int n = 2; n <= 7; ++n) {
    const Classification piv = classify(n, Move::kPivot, Universe::kConnected, Mode::kUnlabelled);
    const Classification lc = classify(n, Move::kLc, Universe::kConnected, Mode::kUnlabelled);
    std::map<Graph, std::size_t> lc_id;
    for (std::size_t k = 0; k < lc.representatives.size(); ++k)
      for (const Graph& m : unlabelled_orbit(lc.representatives[k], Move::kLc)) lc_id.emplace(m, k);
    std::vector<std::uint64_t> covered(lc.representatives.size(), 0);
    for (std::size_t k = 0; k < piv.representatives.size(); ++k) {
      const auto members = unlabelled_orbit(piv.representatives[k], Move::kPivot);
      const std::size_t id = lc_id.at(members.front());
      for (const Graph& m : members) ASSERT_EQ(lc_id.at(m), id);
      covered[id] += members.size();
    }
    for (std::size_t k = 0; k < lc.representatives.size(); ++k)
      EXPECT_EQ(covered[k], lc.orbit_sizes[k]) << "n=" << n;
    EXPECT_LE(lc.count, piv.count);
  }
}

TEST(Orbit, UnlabelledCountsIgnoreSwapConvention) {
  for (int n = 2; n <= 6; ++n) {
    for (Universe u : {Universe::kAll, Universe::kConnected}) {
      ClassifyOptions no;
      no.swap = LabelSwap::kNo;
      EXPECT_EQ(classify(n, Move::kPivot, u, Mode::kUnlabelled).count,
                classify(n, Move::kPivot, u, Mode::kUnlabelled, no).count);
    }
  }
}

TEST(Orbit, LabelledOrbitsCoverTheLabelledUniverse) {
  for (int n = 1; n <= 5; ++n) {
    const Classification c = classify(n, Move::kPivot, Universe::kAll, Mode::kLabelled);
    EXPECT_EQ(std::accumulate(c.orbit_sizes.begin(), c.orbit_sizes.end(), std::uint64_t{0}), labelled_universe(n));
    std::uint64_t total = 0;
    for (const Graph& g : graphs_up_to_isomorphism(n, Universe::kAll))
      total += factorial(n) / static_cast<std::uint64_t>(automorphisms(g));
    EXPECT_EQ(total, labelled_universe(n));
  }
}

TEST(Orbit, BipartiteExtension) {
  const Graph k2 = Graph::complete(2);
  EXPECT_EQ(extend_bipartite({k2}).size(), 2U);
  const Graph p4 = Graph::path(4);
  EXPECT_EQ(extend_bipartite({p4}).size(), 6U);
  EXPECT_EQ(bipartite_sides(Graph::star(4)), (std::pair<int, int>{1, 3}));
  EXPECT_EQ(classify_bipartite_by_extension(7).count, 15U);
  for (int n = 1; n <= 8; ++n) {
    const Classification ext = classify_bipartite_by_extension(n);
    const Classification direct = classify(n, Move::kPivot, Universe::kBipartiteConnected, Mode::kUnlabelled);
    EXPECT_EQ(ext.count, direct.count) << "n=" << n;
    EXPECT_EQ(ext.representatives, direct.representatives) << "n=" << n;
  }
}

TEST(Orbit, EulerTransform) {
  // One connected class per size gives the partition numbers.
  EXPECT_EQ(euler_transform({0, 1, 1, 1, 1, 1, 1}), (std::vector<std::uint64_t>{1, 1, 2, 3, 5, 7, 11}));
  // Connected graphs to all graphs.
  EXPECT_EQ(euler_transform({0, 1, 1, 2, 6, 21}), (std::vector<std::uint64_t>{1, 1, 2, 4, 11, 34}));
}

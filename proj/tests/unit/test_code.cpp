#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pivotlab/canonical.hpp"
#include "pivotlab/code.hpp"
#include "pivotlab/error.hpp"
#include "pivotlab/orbit.hpp"
#include "pivotlab/spectral.hpp"

using namespace pivotlab;

namespace {

LinearCode code(std::string_view text) { return parse_code_text(text); }

LinearCode hamming74() { return code("7 4\n1000110\n0100101\n0010011\n0001111\n"); }

// Brute-force row space as a sorted word list.
std::vector<Mask> words(const LinearCode& c) {
  std::vector<Mask> out;
  for (Mask s = 0; s < bit(c.k()); ++s) {
    Mask w = 0;
    for (int i = 0; i < c.k(); ++i)
      if (s >> i & 1U) w ^= c.rows()[static_cast<std::size_t>(i)];
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinearCode random_code(std::mt19937_64& rng, int n, int k) {
  while (true) {
    std::vector<Mask> rows;
    for (int i = 0; i < k; ++i) rows.push_back(static_cast<Mask>(rng()) & low_mask(n));
    if (gf2_rank(rows) == k) return LinearCode(n, rows);
  }
}

}  // namespace

TEST(Code, Construction) {
  EXPECT_THROW(LinearCode(3, {0b011, 0b011}), std::invalid_argument);
  EXPECT_THROW(LinearCode(3, {0b1000}), RangeError);
  const LinearCode c = code("3 1\n111\n");
  EXPECT_EQ(c.n(), 3);
  EXPECT_EQ(c.k(), 1);
  EXPECT_TRUE(c.bit_at(0, 2));
  EXPECT_EQ(format_code_text(c), "3 1\n111\n");
  EXPECT_TRUE(c.same_code(code("3 1\n111\n")));
  EXPECT_THROW(code("2 1\n12\n"), ParseError);
  EXPECT_THROW(code("3 2\n111\n"), ParseError);
  EXPECT_THROW(code("3 1\n11\n"), ParseError);
  EXPECT_THROW(code("3 2\n110\n110\n"), ParseError);
}

TEST(Code, StandardFormExamples) {
  const StandardForm rep = standard_form(code("3 1\n111\n"));
  EXPECT_EQ(rep.p, std::vector<Mask>{0b11});
  EXPECT_EQ(rep.columns, (std::vector<int>{0, 1, 2}));

  const LinearCode two = code("4 2\n1100\n0111\n");
  const StandardForm sf = standard_form(two);
  EXPECT_EQ(sf.columns, (std::vector<int>{0, 1, 2, 3}));
  // Row 0 becomes 1100 + 0111 = 1011, row 1 stays 0111.
  EXPECT_EQ(sf.p, (std::vector<Mask>{0b11, 0b11}));
  EXPECT_TRUE(code_from_standard(sf).same_code(two));

  const StandardForm fixed = standard_form(code("4 2\n1010\n0111\n"));
  EXPECT_EQ(fixed.columns, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(fixed.p, (std::vector<Mask>{0b01, 0b11}));
}

TEST(Code, StandardFormGeneratesAPermutedCode) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const int k = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    const LinearCode c = random_code(rng, n, k);
    const StandardForm sf = standard_form(c);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(sf.columns[static_cast<std::size_t>(i)])] = i;
    ASSERT_EQ(words(code_from_standard(sf)), words(c.permuted(perm)));
  }
}

TEST(Code, GraphCorrespondence) {
  EXPECT_EQ(graph_from_code(code("3 1\n111\n")), Graph::star(3));
  EXPECT_EQ(graph_from_code(code("2 1\n11\n")), Graph::complete(2));
  EXPECT_THROW(code_from_graph(Graph::complete(3), bit(0)), std::invalid_argument);
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const LinearCode c = random_code(rng, n, k);
    const StandardForm sf = standard_form(c);
    const Graph g = graph_from_code(c);
    ASSERT_EQ(p_from_graph(g, k), sf.p);
    ASSERT_TRUE(code_from_graph(g, low_mask(k)).same_code(code_from_standard(sf)));
    // The dual has the complementary information set and the same graph.
    const LinearCode standard = code_from_standard(sf);
    ASSERT_EQ(fundamental_graph(dual(standard), low_mask(n) & ~low_mask(k)), g);
    // Re-standardising the dual lands elsewhere in the same pivot orbit.
    const auto orbit = unlabelled_orbit(g, Move::kPivot);
    ASSERT_TRUE(std::binary_search(orbit.begin(), orbit.end(), canonical_graph(graph_from_code(dual(c)))));
  }
}

TEST(Code, Duality) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int k = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    const LinearCode c = random_code(rng, n, k);
    const LinearCode d = dual(c);
    ASSERT_EQ(d.k(), n - k);
    for (Mask g : c.rows())
      for (Mask h : d.rows()) ASSERT_EQ(std::popcount(g & h) % 2, 0);
    ASSERT_TRUE(dual(d).same_code(c));
  }
}

TEST(Code, PivotOnP) {
  EXPECT_EQ(pivot_p({0b1}, 1, 2, 0, 1), std::vector<Mask>{0b1});
  EXPECT_EQ(pivot_p({0b11, 0b01}, 2, 4, 0, 2), (std::vector<Mask>{0b11, 0b11}));
  EXPECT_THROW(pivot_p({0b10, 0b01}, 2, 4, 0, 2), NotAnEdgeError);
  EXPECT_THROW(pivot_p({0b1}, 1, 2, 0, 0), RangeError);

  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    std::vector<Mask> p;
    for (int i = 0; i < k; ++i) p.push_back(static_cast<Mask>(rng()) & low_mask(n - k));
    const Graph g = graph_from_p(k, n, p);
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const auto [u, v] = edges[rng() % edges.size()];
    ASSERT_EQ(pivot_p(p, k, n, u, v), p_from_graph(pivot(g, u, v, LabelSwap::kNo), k));
  }
}

TEST(Code, PivotIsACoordinateSwap) {
  // Every P with at most four rows and four columns.
  for (int k = 1; k <= 4; ++k) {
    for (int m = 1; m <= 4; ++m) {
      const int n = k + m;
      for (std::uint32_t bits = 0; bits < (1U << (k * m)); ++bits) {
        std::vector<Mask> p;
        for (int i = 0; i < k; ++i) p.push_back((bits >> (i * m)) & low_mask(m));
        StandardForm sf{n, k, p, {}};
        sf.columns.resize(static_cast<std::size_t>(n));
        std::iota(sf.columns.begin(), sf.columns.end(), 0);
        const LinearCode c = code_from_standard(sf);
        const Graph g = graph_from_p(k, n, p);
        for (const auto& [u, v] : g.edges()) {
          std::vector<int> swap(static_cast<std::size_t>(n));
          std::iota(swap.begin(), swap.end(), 0);
          std::swap(swap[static_cast<std::size_t>(u)], swap[static_cast<std::size_t>(v)]);
          ASSERT_EQ(fundamental_graph(c, low_mask(k) ^ bit(u) ^ bit(v)), pivot(g, u, v, LabelSwap::kYes));
          ASSERT_EQ(fundamental_graph(c.permuted(swap), low_mask(k)), pivot(g, u, v, LabelSwap::kNo));
        }
      }
    }
  }
}

TEST(Code, Equivalence) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const LinearCode c = random_code(rng, n, k);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_TRUE(equivalent(c, c.permuted(perm)));
  }
  EXPECT_FALSE(equivalent(code("3 1\n111\n"), code("3 2\n110\n011\n")));
  EXPECT_THROW(equivalent(code("3 1\n111\n"), code("2 1\n11\n")), DimensionError);

  const CodeClassification six = classify_codes(6);
  std::vector<LinearCode> k3;
  for (const LinearCode& c : six.codes)
    if (c.k() == 3) k3.push_back(c);
  ASSERT_GE(k3.size(), 2U);
  for (std::size_t a = 0; a < k3.size(); ++a)
    for (std::size_t b = 0; b < k3.size(); ++b) EXPECT_EQ(equivalent(k3[a], k3[b]), a == b);
}

TEST(Code, InformationSets) {
  EXPECT_EQ(information_set_count(code("3 1\n111\n")), 3U);
  EXPECT_EQ(information_set_count(code("2 1\n11\n")), 2U);
  EXPECT_EQ(information_set_count_brute(hamming74()), 28U);
  EXPECT_EQ(information_set_count(hamming74()), 28U);
  EXPECT_TRUE(is_information_set(hamming74(), low_mask(4)));
  // 1000110 vanishes on {1, 2, 3, 6}.
  EXPECT_FALSE(is_information_set(hamming74(), bit(1) | bit(2) | bit(3) | bit(6)));
  EXPECT_THROW(fundamental_graph(code("3 1\n110\n"), bit(2)), std::invalid_argument);

  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const LinearCode c = random_code(rng, n, k);
    std::uint64_t subsets = 0;
    for (Mask s = 0; s < bit(n); ++s) {
      if (std::popcount(s) != k) continue;
      oracle::Matrix m;
      for (Mask row : c.rows()) {
        std::vector<int> bits;
        for (int j = 0; j < n; ++j)
          if (s >> j & 1U) bits.push_back((row >> j) & 1U);
        m.push_back(bits);
      }
      subsets += oracle::rank_gf2(m) == k;
    }
    ASSERT_EQ(information_set_count_brute(c), subsets);
    ASSERT_EQ(information_set_count(c), subsets) << format_code_text(c);
  }
}

TEST(Code, Classification) {
  const CodeClassification two = classify_codes(2);
  EXPECT_EQ(two.indecomposable, 1U);
  EXPECT_EQ(two.isodual, 1U);
  const CodeClassification six = classify_codes(6);
  EXPECT_EQ(six.indecomposable, 13U);
  EXPECT_EQ(six.isodual, 3U);
  EXPECT_EQ(six.orbits, 8U);
  std::uint64_t sum = 0;
  for (const auto& [k, count] : six.per_k) sum += count;
  EXPECT_EQ(sum, six.indecomposable);
  EXPECT_EQ(six.codes.size(), six.indecomposable);
  for (const LinearCode& c : six.codes) {
    EXPECT_TRUE(is_connected(graph_from_code(c)));
    EXPECT_EQ(information_set_count(c), information_set_count_brute(c));
  }
  const CodeClassification nine = classify_codes(9);
  EXPECT_EQ(nine.indecomposable, 220U);
  EXPECT_EQ(nine.isodual, 0U);
  EXPECT_THROW(classify_codes(0), RangeError);
}

#include "pivotlab/suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "pivotlab/bounds.hpp"
#include "pivotlab/code.hpp"
#include "pivotlab/hypergraph.hpp"
#include "pivotlab/identities.hpp"
#include "pivotlab/orbit.hpp"
#include "pivotlab/spectral.hpp"

namespace pivotlab {

void SuitePart::record(bool ok, const std::string& input) {
  ++checks;
  if (ok) return;
  ++failures;
  if (examples.size() < 5) examples.push_back(input);
}

SuitePart& SuiteReport::part(const std::string& name) {
  for (auto& p : parts)
    if (p.name == name) return p;
  parts.push_back(SuitePart{name, 0, 0, {}});
  return parts.back();
}

std::uint64_t SuiteReport::checks() const {
  std::uint64_t c = 0;
  for (const auto& p : parts) c += p.checks;
  return c;
}

std::uint64_t SuiteReport::failures() const {
  std::uint64_t c = 0;
  for (const auto& p : parts) c += p.failures;
  return c;
}

namespace {

std::vector<Mask> monomials_between(int n, int lo, int hi, Mask avoid = 0) {
  std::vector<Mask> out;
  for (Mask m = 0; m < bit(n); ++m) {
    const int d = std::popcount(m);
    if (d >= lo && d <= hi && !(m & avoid)) out.push_back(m);
  }
  return out;
}

BooleanFunction pick_terms(int n, const std::vector<Mask>& monomials, std::uint64_t pick) {
  std::vector<Mask> terms;
  for (std::size_t b = 0; b < monomials.size(); ++b)
    if ((pick >> b) & 1U) terms.push_back(monomials[b]);
  return BooleanFunction(n, std::move(terms));
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  BooleanFunction function(int n, const std::vector<Mask>& monomials, double density) {
    std::vector<Mask> terms;
    for (Mask m : monomials)
      if (coin(density)) terms.push_back(m);
    return BooleanFunction(n, std::move(terms));
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

std::string describe(const BooleanFunction& p) { return format_anf(p); }

std::vector<std::pair<int, int>> admissible_edges(const BooleanFunction& p) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < p.n(); ++u)
    for (int v = u + 1; v < p.n(); ++v)
      if (is_admissible_edge(p, u, v)) out.emplace_back(u, v);
  return out;
}

std::string factor_list(const std::vector<BooleanFunction>& fs) {
  std::string s = "[";
  for (std::size_t k = 0; k < fs.size(); ++k) s += (k ? "; " : "") + format_terms(fs[k]);
  return s + "]";
}

void check_h(SuiteReport& r, const std::vector<BooleanFunction>& factors, const BooleanFunction& p, int i) {
  const HIdentityReport rep = verify_h_identities(factors, p, i);
  r.part(std::string("h-") + std::string(branch_name(rep.branch)))
      .record(rep.holds(), describe(p) + " i=" + std::to_string(i) + " m=" + factor_list(factors));
}

void check_napf(SuiteReport& r, const BooleanFunction& m, const Z4Function& z, int j, const std::string& what) {
  r.part("napf").record(verify_napf(m, z, j), what + " j=" + std::to_string(j) + " m=" + format_terms(m));
}

void check_edges(SuiteReport& r, const BooleanFunction& p) {
  for (const auto& [u, v] : admissible_edges(p)) {
    const std::string where = describe(p) + " edge " + std::to_string(u) + "-" + std::to_string(v);
    r.part("pivot-identity").record(verify_pivot_identity(p, u, v), where);
    r.part("lc-chain").record(verify_lc_chain(p, u, v).holds(), where);
    r.part("lc-chain").record(verify_lc_chain(p, v, u).holds(), where + " (reversed)");
  }
}

}  // namespace

SuiteReport transform_identity_suite(const IdentitySuiteOptions& options) {
  SuiteReport r;
  r.suite = "transform-identities";
  for (int n = 1; n <= options.exhaustive_max_n; ++n) {
    const std::vector<Mask> monomials = monomials_between(n, 2, n);
    const std::uint64_t count = std::uint64_t{1} << monomials.size();
    for (std::uint64_t pick = 0; pick < count; ++pick) {
      const BooleanFunction p = pick_terms(n, monomials, pick);
      check_edges(r, p);
      for (int i = 0; i < n; ++i) {
        const BooleanFunction xi = BooleanFunction::variable(n, i);
        const BooleanFunction one = BooleanFunction::constant(n, true);
        check_h(r, {}, p, i);
        check_h(r, {xi + one}, p, i);
        check_h(r, {xi}, p, i);
        for (int k = 0; k < n; ++k) {
          if (k == i) continue;
          const BooleanFunction xk = BooleanFunction::variable(n, k);
          check_h(r, {xk}, p, i);
          check_h(r, {xk + one}, p, i);
          check_h(r, {xi + xk}, p, i);
          check_h(r, {xi + xk + one, xk}, p, i);
          check_h(r, {xi * xk}, p, i);
          check_h(r, {xi * xk + one}, p, i);
        }
      }
      for (int j = 0; j < n; ++j) {
        std::vector<BooleanFunction> ms{BooleanFunction::constant(n, true), BooleanFunction::variable(n, j),
                                        BooleanFunction::variable(n, j) + BooleanFunction::constant(n, true)};
        for (int k = 0; k < n; ++k)
          if (k != j) {
            ms.push_back(BooleanFunction::variable(n, k));
            ms.push_back(BooleanFunction::variable(n, j) * BooleanFunction::variable(n, k) +
                         BooleanFunction::constant(n, true));
          }
        std::vector<std::pair<Z4Function, std::string>> zs{{Z4Function::lift(p), "2[" + format_terms(p) + "]"}};
        for (int k = 0; k < n; ++k)
          zs.emplace_back(Z4Function::lift(p) + Z4Function::embed(BooleanFunction::variable(n, k)),
                          "2[" + format_terms(p) + "]+[x" + std::to_string(k) + "]");
        for (const auto& m : ms)
          for (const auto& [z, text] : zs) check_napf(r, m, z, j, text);
      }
    }
  }

  Random rng(options.seed);
  for (std::uint64_t s = 0; s < options.random_samples; ++s) {
    const int n = rng.uniform(options.random_min_n, options.random_max_n);
    const std::vector<Mask> all = monomials_between(n, 0, std::min(n, 4));
    const BooleanFunction p = rng.function(n, all, 0.3);

    // NAPF with a random Z4 phase and a random m.
    {
      std::vector<int> table(std::size_t{1} << n);
      for (int& t : table) t = rng.uniform(0, 3);
      const Z4Function z = Z4Function::from_fn(n, [&](Mask x) { return table[x]; });
      const BooleanFunction m = rng.function(n, all, 0.3);
      check_napf(r, m, z, rng.uniform(0, n - 1), "random Z4 n=" + std::to_string(n));
    }

    // H identities, branch chosen by the sample index.
    {
      const int i = rng.uniform(0, n - 1);
      const std::vector<Mask> others = monomials_between(n, 0, std::min(n, 3), bit(i));
      std::vector<BooleanFunction> factors;
      const int extra = rng.uniform(0, 2);
      for (int k = 0; k < extra; ++k) factors.push_back(rng.function(n, others, 0.4));
      const BooleanFunction xi = BooleanFunction::variable(n, i);
      switch (s % 3) {
        case 0:
          break;
        case 1: {
          const int lin = rng.uniform(1, 2);
          for (int k = 0; k < lin; ++k) factors.push_back(xi + rng.function(n, others, 0.4));
          break;
        }
        default: {
          BooleanFunction a = rng.function(n, others, 0.4);
          while (a.degree() == 0) a = rng.function(n, others, 0.5);
          factors.push_back(xi * a + rng.function(n, others, 0.4));
          break;
        }
      }
      check_h(r, factors, p, i);
    }

    // Pivot identity and LC chain on a random admissible edge.
    {
      BooleanFunction q = p;
      auto edges = admissible_edges(q);
      for (int tries = 0; edges.empty() && tries < 50; ++tries) {
        q = rng.function(n, all, 0.3);
        edges = admissible_edges(q);
      }
      if (!edges.empty()) {
        const auto [u, v] = edges[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(edges.size()) - 1))];
        const std::string where = describe(q) + " edge " + std::to_string(u) + "-" + std::to_string(v);
        r.part("pivot-identity").record(verify_pivot_identity(q, u, v), where);
        r.part("lc-chain").record(verify_lc_chain(q, u, v).holds(), where);
      }
    }
  }
  return r;
}

SuiteReport pivot_spectra_suite(std::uint64_t hypergraphs, int max_n, int graph_max_n, std::uint64_t seed) {
  SuiteReport r;
  r.suite = "pivot-spectra";
  Random rng(seed);
  for (std::uint64_t s = 0; s < hypergraphs; ++s) {
    const int n = rng.uniform(2, max_n);
    const std::vector<Mask> hyper = monomials_between(n, 2, std::min(n, 4));
    const std::vector<Mask> affine = monomials_between(n, 0, 1);
    BooleanFunction p;
    std::vector<std::pair<int, int>> edges;
    do {
      p = rng.function(n, hyper, 0.35) + rng.function(n, affine, 0.5);
      edges = admissible_edges(p);
    } while (edges.empty());
    for (const auto& [u, v] : edges)
      r.part("hypergraph").record(verify_pivot_identity(p, u, v),
                                  describe(p) + " edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  for (int n = 2; n <= graph_max_n; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) {
      const Graph g = Graph::from_edge_code(n, code);
      if (!is_connected(g)) continue;
      const BooleanFunction p = to_anf(g);
      for (const auto& [u, v] : g.edges())
        r.part("connected-graph").record(verify_pivot_identity(p, u, v),
                                         format_hex_rows(g) + " edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
  return r;
}

SuiteReport quadratic_pivot_suite(int max_n) {
  SuiteReport r;
  r.suite = "quadratic-pivot";
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : graphs_up_to_isomorphism(n, Universe::kConnected)) {
      const std::vector<Mask> flat = flat_h_sets(to_anf(g));
      const std::set<Mask> flat_set(flat.begin(), flat.end());
      // Pivot with label swap matches the function-level pivot, so the state
      // (graph, accumulated H positions) follows H_u H_v exactly.
      struct State {
        Graph g;
        Mask x;
        bool operator==(const State& o) const { return x == o.x && g == o.g; }
      };
      struct StateHash {
        std::size_t operator()(const State& s) const { return s.g.hash() * 1099511628211ULL ^ s.x; }
      };
      std::unordered_set<State, StateHash> seen{{g, 0}};
      std::vector<State> todo{{g, 0}};
      std::set<Mask> reached{0};
      while (!todo.empty()) {
        const State s = todo.back();
        todo.pop_back();
        for (const auto& [u, v] : s.g.edges()) {
          State next{pivot(s.g, u, v, LabelSwap::kYes), s.x ^ bit(u) ^ bit(v)};
          if (seen.insert(next).second) {
            reached.insert(next.x);
            todo.push_back(next);
          }
        }
      }
      r.part("n=" + std::to_string(n)).record(reached == flat_set, format_hex_rows(g));
    }
  }
  return r;
}

SuiteReport only_pivot_suite(std::uint64_t samples, int max_n, std::uint64_t seed) {
  SuiteReport r;
  r.suite = "only-pivot";
  Random rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const int n = rng.uniform(3, max_n);
    const std::vector<Mask> terms = monomials_between(n, 2, 3);
    BooleanFunction p;
    do {
      p = rng.function(n, terms, 0.3);
    } while (p.degree() != 3);
    const SpectralVector base = bipolar(p);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        SpectralVector v = base;
        apply_kernel_inplace(v, i, Kernel::H);
        apply_kernel_inplace(v, j, Kernel::H);
        r.part("pairs").record(is_flat(v) == is_admissible_edge(p, i, j),
                               describe(p) + " pair " + std::to_string(i) + "-" + std::to_string(j));
      }
  }
  return r;
}

SuiteReport rank_criterion_suite(int max_n, int threads) {
  SuiteReport r;
  r.suite = "rank-criterion";
  FlatCountOptions one;
  one.threads = threads;
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) {
      const Graph g = Graph::from_edge_code(n, code);
      const BooleanFunction p = to_anf(g);
      for (Family f : {Family::IH, Family::IHN, Family::HN})
        r.part(std::string(family_name(f)))
            .record(count_flat_quadratic(g, f, one).count == count_flat(p, f, one).count, format_hex_rows(g));
      // Spec by spec over {I,H,N}^n.
      const SpectralVector base = bipolar(p);
      std::uint64_t specs = 1;
      for (int i = 0; i < n; ++i) specs *= 3;
      for (std::uint64_t s = 0; s < specs; ++s) {
        TransformSpec t(n);
        std::uint64_t digits = s;
        for (int i = 0; i < n; ++i, digits /= 3) t.set(i, static_cast<Kernel>(digits % 3));
        r.part("per-spec").record(is_flat_quadratic(g, t) == is_flat(apply(base, t)),
                                  format_hex_rows(g) + " " + t.to_string());
      }
    }
  }
  return r;
}

SuiteReport family_suite(int max_n, std::uint64_t samples, int ihn_exhaustive_t, std::uint64_t seed) {
  SuiteReport r;
  r.suite = "family";
  Random rng(seed);
  for (int n = 1; n <= max_n; ++n) {
    for (int t = 0; t <= n - 1; ++t) {
      const std::vector<Mask> hterms = monomials_between(t, 2, t);
      const std::uint64_t bound = family_ih_bound(n, t);
      const std::uint64_t ihn_bound = family_ihn_bound(n, t);
      const std::string tag = "n=" + std::to_string(n) + " t=" + std::to_string(t);
      auto embed_h = [&](const BooleanFunction& small) {
        std::vector<Mask> terms(small.terms().begin(), small.terms().end());
        return BooleanFunction(n, std::move(terms));
      };
      auto lower = [&](const BooleanFunction& h, bool with_ihn) {
        const FamilyCounts c = family_flat_counts(n, t, embed_h(h), with_ihn, 1);
        r.part("ih-lower-bound").record(c.ih_count >= bound, tag + " h=" + format_terms(h));
        if (c.ihn_count)
          r.part("ihn-lower-bound").record(*c.ihn_count >= ihn_bound, tag + " h=" + format_terms(h));
      };
      if (t <= 4) {
        const std::uint64_t count = std::uint64_t{1} << hterms.size();
        for (std::uint64_t pick = 0; pick < count; ++pick)
          lower(pick_terms(std::max(t, 1), hterms, pick), t <= ihn_exhaustive_t);
      }
      if (t > 4 || t > ihn_exhaustive_t)
        for (std::uint64_t s = 0; s < samples; ++s) lower(rng.function(std::max(t, 1), hterms, 0.5), true);

      // Equality at the top-degree monomial (the constant 1 when t = 0).
      const BooleanFunction top(n, std::vector<Mask>{low_mask(t)});
      const FamilyCounts c = family_flat_counts(n, t, top, false, 1);
      r.part("ih-equality").record(c.ih_count == bound, tag + ": count " + std::to_string(c.ih_count) +
                                                            ", bound " + std::to_string(bound));
    }
  }
  return r;
}

SuiteReport clique_suite(int direct_max_n, int rank_max_n) {
  SuiteReport r;
  r.suite = "clique";
  for (int n = 2; n <= direct_max_n; ++n) {
    FlatCountOptions o;
    o.max_n = std::max(n, default_direct_limit(Family::IH));
    r.part("direct").record(count_flat(to_anf(Graph::complete(n)), Family::IH, o).count == std::uint64_t{1} << (n - 1),
                            "K" + std::to_string(n));
  }
  for (int n = 2; n <= rank_max_n; ++n)
    r.part("rank").record(count_flat_quadratic(Graph::complete(n), Family::IH).count == std::uint64_t{1} << (n - 1),
                          "K" + std::to_string(n));
  return r;
}

SuiteReport infoset_suite(int max_n, int threads) {
  SuiteReport r;
  r.suite = "information-sets";
  for (int n = 1; n <= max_n; ++n)
    for (const LinearCode& c : classify_codes(n, threads).codes)
      r.part("n=" + std::to_string(n))
          .record(information_set_count(c) == information_set_count_brute(c), format_code_text(c));
  return r;
}

}  // namespace pivotlab

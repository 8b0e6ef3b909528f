#include "pivotlab/identities.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "pivotlab/error.hpp"
#include "pivotlab/hypergraph.hpp"

namespace pivotlab {

namespace {

bool same_amps(const SpectralVector& a, const SpectralVector& b) { return a.amps() == b.amps(); }

BooleanFunction product(int n, std::span<const BooleanFunction> fs) {
  BooleanFunction m = BooleanFunction::constant(n, true);
  for (const auto& f : fs) m = m * f;
  return m;
}

std::vector<BooleanFunction> term_list(const BooleanFunction& f) {
  std::vector<BooleanFunction> out;
  for (Mask t : f.terms()) out.push_back(BooleanFunction(f.n(), {t}));
  return out;
}

// sum_{r<s} t_r t_s over the terms of f.
BooleanFunction pair_products(const BooleanFunction& f) {
  const auto ts = term_list(f);
  BooleanFunction acc(f.n());
  for (std::size_t r = 0; r < ts.size(); ++r) {
    for (std::size_t s = r + 1; s < ts.size(); ++s) acc += ts[r] * ts[s];
  }
  return acc;
}

struct EdgeParts {
  BooleanFunction xl, xj, nl, nj, rest;
};

EdgeParts split_edge(const BooleanFunction& p, int l, int j) {
  if (!is_admissible_edge(p, l, j)) {
    throw InadmissibleEdgeError("x" + std::to_string(l) + "*x" + std::to_string(j) +
                                " is not an admissible pivot edge");
  }
  const int n = p.n();
  EdgeParts e{BooleanFunction::variable(n, l), BooleanFunction::variable(n, j), edge_neighbourhood(p, l, j),
              edge_neighbourhood(p, j, l), BooleanFunction(n)};
  e.rest = p + e.xl * e.xj + e.xl * e.nl + e.xj * e.nj;
  return e;
}

void multiply_by_i_where(SpectralVector& s, int pos) {
  auto& amps = s.mutable_amps();
  for (std::size_t x = 0; x < amps.size(); ++x) {
    if (x & (std::size_t{1} << pos)) amps[x] = amps[x].times_i();
  }
}

// delta N_pos: raw N, exact division by 1 + i, then diag(1, i) at l and j.
bool delta_n(SpectralVector& s, int pos, int l, int j) {
  apply_kernel_inplace(s, pos, Kernel::N);
  bool exact = true;
  for (auto& a : s.mutable_amps()) {
    Gaussian q;
    if (!divide_one_plus_i(a, q)) {
      exact = false;
      continue;
    }
    a = q;
  }
  // The deferred sqrt(2) of N cancels against the sqrt(2) in delta's scalar.
  s.set_half_pow(s.half_pow() - 1);
  multiply_by_i_where(s, l);
  multiply_by_i_where(s, j);
  return exact;
}

// 2x2 complex matrix times 2^(-q/2).
struct Mat2 {
  std::array<Gaussian, 4> e{};
  int half_pow = 0;

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 c;
    c.e[0] = a.e[0] * b.e[0] + a.e[1] * b.e[2];
    c.e[1] = a.e[0] * b.e[1] + a.e[1] * b.e[3];
    c.e[2] = a.e[2] * b.e[0] + a.e[3] * b.e[2];
    c.e[3] = a.e[2] * b.e[1] + a.e[3] * b.e[3];
    c.half_pow = a.half_pow + b.half_pow;
    return c;
  }
};

const Mat2 kH{{Gaussian(1), Gaussian(1), Gaussian(1), Gaussian(-1)}, 1};
const Mat2 kN{{Gaussian(1), Gaussian(0, 1), Gaussian(1), Gaussian(0, -1)}, 1};
const Mat2 kD{{Gaussian(1), Gaussian(0), Gaussian(0), Gaussian(0, 1)}, 0};
const Mat2 kDPrime{{Gaussian(0), Gaussian(-1), Gaussian(1), Gaussian(0)}, 0};

SpectralVector as_vector(const Mat2& m) { return SpectralVector(2, {m.e.begin(), m.e.end()}, m.half_pow); }

// e^{i k pi/4} H as an exact matrix.
Mat2 rotated_h(int k) {
  Mat2 m = kH;
  Gaussian c = i_pow(k / 2);
  if (k % 2 == 1) {
    c = c * Gaussian(1, 1);
    m.half_pow += 1;
  }
  for (auto& x : m.e) x = x * c;
  return m;
}

int h_multiple(const Mat2& m) {
  for (int k = 0; k < 8; ++k) {
    if (same_vector(as_vector(m), as_vector(rotated_h(k)))) return k;
  }
  return -1;
}

}  // namespace

bool verify_pivot_identity(const BooleanFunction& p, int u, int v) {
  const BooleanFunction q = pivot_anf(p, u, v);
  SpectralVector s = bipolar(p);
  apply_kernel_inplace(s, u, Kernel::H);
  apply_kernel_inplace(s, v, Kernel::H);
  return same_vector(s, bipolar(q));
}

std::string_view branch_name(HBranch b) {
  switch (b) {
    case HBranch::kNotInM: return "notinm";
    case HBranch::kInM: return "inm";
    case HBranch::kGeneral: return "general";
  }
  return "?";
}

HIdentityReport verify_h_identities(std::span<const BooleanFunction> factors, const BooleanFunction& p, int i) {
  const int n = p.n();
  if (i < 0 || i >= n) throw RangeError("transform position out of range");
  std::vector<BooleanFunction> vs;
  std::vector<BooleanFunction> rs;
  for (const auto& h : factors) {
    if (h.n() != n) throw DimensionError("factor has a different variable count than p");
    (h.depends_on(i) ? vs : rs).push_back(h);
  }
  const BooleanFunction m = product(n, factors);
  const BooleanFunction r = product(n, rs);
  const BooleanFunction v = product(n, vs);

  SpectralVector lhs = phase_vector(m, Z4Function::lift(p));
  apply_kernel_inplace(lhs, i, Kernel::H);

  const auto tr = r.truth_table();
  const auto tm = m.truth_table();
  const auto tv0 = restrict_var(v, i, false).truth_table();
  const auto tv1 = restrict_var(v, i, true).truth_table();
  const auto tp0 = restrict_var(p, i, false).truth_table();
  const auto tp1 = restrict_var(p, i, true).truth_table();
  const std::size_t size = tr.size();
  auto sign = [](int e) { return (e & 1) ? Gaussian(-1) : Gaussian(1); };
  auto xi = [&](std::size_t x) { return static_cast<int>((x >> i) & 1U); };

  HIdentityReport rep;
  {
    bool ok = true;
    for (std::size_t x = 0; x < size && ok; ++x) {
      const int p0 = tp0[x];
      const int p1 = tp1[x];
      const int v0 = tv0[x];
      const int v1 = tv1[x];
      const int d = p0 ^ p1 ^ xi(x);
      Gaussian rhs = (tr[x] & (v0 ^ v1)) ? sign(p0 ^ (v1 & d)) : Gaussian(0);
      if (tr[x] & v0 & v1 & (d ^ 1)) rhs += Gaussian(2) * sign(p0);
      ok = lhs[static_cast<Mask>(x)] == rhs;
    }
    rep.general_holds = ok;
  }

  bool all_linear = !vs.empty();
  for (const auto& h : vs) {
    if (neighbourhood(h, i) != BooleanFunction::constant(n, true)) all_linear = false;
  }
  if (vs.empty()) {
    rep.branch = HBranch::kNotInM;
    bool ok = true;
    for (std::size_t x = 0; x < size && ok; ++x) {
      const int p0 = tp0[x];
      const int p1 = tp1[x];
      const Gaussian rhs = (tm[x] & (p0 ^ p1 ^ xi(x) ^ 1)) ? Gaussian(2) * sign(p0) : Gaussian(0);
      ok = lhs[static_cast<Mask>(x)] == rhs;
    }
    rep.branch_holds = ok;
  } else if (all_linear) {
    rep.branch = HBranch::kInM;
    bool ok = true;
    for (std::size_t z = 0; z < vs.size() && ok; ++z) {
      const auto hz1 = restrict_var(vs[z], i, true).truth_table();
      for (std::size_t jj = 0; jj < vs.size() && ok; ++jj) {
        BooleanFunction bracket = r;
        for (std::size_t k = 0; k < vs.size(); ++k) {
          if (k != jj) bracket = bracket * (vs[jj] + vs[k] + BooleanFunction::constant(n, true));
        }
        const auto tb = bracket.truth_table();
        for (std::size_t x = 0; x < size && ok; ++x) {
          const int p0 = tp0[x];
          const int d = p0 ^ tp1[x] ^ xi(x);
          const Gaussian rhs = tb[x] ? sign(p0 ^ (hz1[x] & d)) : Gaussian(0);
          ok = lhs[static_cast<Mask>(x)] == rhs;
        }
        ++rep.choices_checked;
      }
    }
    rep.branch_holds = ok;
  } else {
    rep.branch = HBranch::kGeneral;
    rep.branch_holds = rep.general_holds;
  }
  return rep;
}

bool verify_napf(const BooleanFunction& m, const Z4Function& p, int j) {
  if (m.n() != p.n()) throw DimensionError("mask and phase functions have different n");
  if (j < 0 || j >= m.n()) throw RangeError("transform position out of range");
  SpectralVector lhs = phase_vector(m, p);
  apply_kernel_inplace(lhs, j, Kernel::N);
  const auto tm0 = restrict_var(m, j, false).truth_table();
  const auto tm1 = restrict_var(m, j, true).truth_table();
  const Z4Function p0 = p.restricted(j, false);
  const Z4Function p1 = p.restricted(j, true);
  for (std::size_t x = 0; x < tm0.size(); ++x) {
    const Mask y = static_cast<Mask>(x);
    const int xj = static_cast<int>((x >> j) & 1U);
    Gaussian rhs(0);
    if (tm0[x]) rhs += i_pow(p0(y));
    if (tm1[x]) rhs += i_pow(p1(y) + 2 * xj + 1);
    if (lhs[y] != rhs) return false;
  }
  return true;
}

Z4Function lc_phase_first(const BooleanFunction& p, int l, int j) {
  const EdgeParts e = split_edge(p, l, j);
  const auto us = term_list(e.nl);
  return Z4Function::lift(p + e.xj * e.nl + pair_products(e.nl)) + embedded_sum(p.n(), us, 3);
}

Z4Function lc_phase_second(const BooleanFunction& p, int l, int j) {
  const EdgeParts e = split_edge(p, l, j);
  const auto vs = term_list(e.nj);
  const BooleanFunction inner = e.xl * e.xj + e.xl * e.nj + e.xj * (e.nl + e.nj) + pair_products(e.nj) +
                                e.nl * e.nj + e.nl + e.rest;
  return Z4Function::lift(inner) + embedded_sum(p.n(), vs, 3);
}

BooleanFunction lc_phase_third(const BooleanFunction& p, int l, int j) {
  const EdgeParts e = split_edge(p, l, j);
  return e.xl * e.xj + e.xl * e.nj + e.xj * e.nl + e.nl * e.nj + e.nl + e.nj + e.rest;
}

LcChainReport verify_lc_chain(const BooleanFunction& p, int l, int j) {
  const int n = p.n();
  const BooleanFunction target = pivot_anf(p, l, j);
  const BooleanFunction one = BooleanFunction::constant(n, true);
  LcChainReport rep;

  SpectralVector s = bipolar(p);
  bool exact = delta_n(s, l, l, j);
  rep.first_unit = std::all_of(s.amps().begin(), s.amps().end(), [](Gaussian g) { return g.norm() == 1; });
  rep.first_matches = same_amps(s, phase_vector(one, lc_phase_first(p, l, j)));

  exact = delta_n(s, j, l, j) && exact;
  rep.second_matches = same_amps(s, phase_vector(one, lc_phase_second(p, l, j)));

  exact = delta_n(s, l, l, j) && exact;
  rep.third_matches = same_amps(s, bipolar(lc_phase_third(p, l, j)));
  rep.exact_steps = exact;

  // gamma = -d'_l d'_j with d': (a, b) -> (-b, a).
  for (int pos : {l, j}) {
    auto& amps = s.mutable_amps();
    const std::size_t b = std::size_t{1} << pos;
    for (std::size_t x = 0; x < amps.size(); ++x) {
      if (x & b) continue;
      const Gaussian a0 = amps[x];
      amps[x] = -amps[x + b];
      amps[x + b] = a0;
    }
  }
  for (auto& a : s.mutable_amps()) a = -a;
  rep.chain_matches_pivot = same_amps(s, bipolar(target));

  // Operators met at position l, in time order: N d | d | N d | d'.
  // At position j: d | N d | d | d'. Matrix products run right to left.
  const Mat2 at_l = kDPrime * kD * kN * kD * kD * kN;
  const Mat2 at_j = kDPrime * kD * kD * kN * kD;
  rep.scalar_l = h_multiple(at_l);
  rep.scalar_j = h_multiple(at_j);
  // Three factors sqrt2/(1+i) = e^{-i pi/4} and the sign of gamma.
  rep.scalar_global = ((-3 + 4) % 8 + 8) % 8;
  rep.collapses_to_hh =
      rep.scalar_l >= 0 && rep.scalar_j >= 0 && (rep.scalar_l + rep.scalar_j + rep.scalar_global) % 8 == 0;
  return rep;
}

}  // namespace pivotlab

#pragma once

// Pointwise checks of the transform identities relating H, N and pivot.
// Every check compares unnormalised butterfly output against the closed form
// with exact Gaussian-integer equality.

#include <span>
#include <string_view>

#include "pivotlab/anf.hpp"
#include "pivotlab/spectral.hpp"
#include "pivotlab/z4.hpp"

namespace pivotlab {

// H_u H_v (-1)^p equals (-1)^{pivot_anf(p,u,v)} (affine terms included).
// Throws InadmissibleEdgeError.
bool verify_pivot_identity(const BooleanFunction& p, int u, int v);

enum class HBranch { kNotInM, kInM, kGeneral };

std::string_view branch_name(HBranch b);

struct HIdentityReport {
  HBranch branch = HBranch::kGeneral;
  // The closed form of the selected branch matches H_i [m](-1)^p.
  bool branch_holds = false;
  // The general closed form, which applies to every input, matches too.
  bool general_holds = false;
  // Number of (h_z, h_j) choices tried for the linear-factor branch.
  int choices_checked = 0;
  bool holds() const { return branch_holds && general_holds; }
};

// m is the product of `factors` (an empty list is m = 1). The branch is
// chosen syntactically: no factor depends on x_i; every factor depending on
// x_i is linear in it; otherwise the general form.
HIdentityReport verify_h_identities(std::span<const BooleanFunction> factors, const BooleanFunction& p, int i);

// N_j [m] i^p = ([m_0] i^{p_0} + [m_1] i^{p_1 + 2x_j + 1}) / sqrt(2).
bool verify_napf(const BooleanFunction& m, const Z4Function& p, int j);

// Z4 phase predicted after the first LC step at l on the edge lj:
// 2[p + x_j sum u_r + sum_{r<s} u_r u_s] + 3 sum [u_r], with u_r the terms
// of N_l (the x_j term excluded).
Z4Function lc_phase_first(const BooleanFunction& p, int l, int j);
// Phase after LC at l then j.
Z4Function lc_phase_second(const BooleanFunction& p, int l, int j);
// Boolean function after LC at l, j, l, before the final antidiagonal step.
BooleanFunction lc_phase_third(const BooleanFunction& p, int l, int j);

struct LcChainReport {
  // Each delta N step produced a multiple of 1 + i (exact division).
  bool exact_steps = false;
  // delta N_l (-1)^p has unit entries and equals i^{p_l}.
  bool first_unit = false;
  bool first_matches = false;
  bool second_matches = false;
  bool third_matches = false;
  // gamma delta N_l delta N_j delta N_l (-1)^p = (-1)^{pivot_anf(p, l, j)}.
  bool chain_matches_pivot = false;
  // k such that the product of the 2x2 operators met at that position equals
  // e^{i k pi/4} H; -1 when it is not a multiple of H.
  int scalar_l = -1;
  int scalar_j = -1;
  // Exponent of e^{i pi/4} carried by the global factors of the three deltas
  // and of gamma.
  int scalar_global = 0;
  // The per-position products and the global factor combine to H_l H_j.
  bool collapses_to_hh = false;

  bool holds() const {
    return exact_steps && first_unit && first_matches && second_matches && third_matches &&
           chain_matches_pivot && collapses_to_hh;
  }
};

// Runs the LC(l) LC(j) LC(l) chain of N transforms with the diagonal
// corrections delta = (sqrt2/(1+i)) d_l d_j, d = diag(1, i), and
// gamma = -d'_l d'_j, d' = ((0,-1),(1,0)). Throws InadmissibleEdgeError.
LcChainReport verify_lc_chain(const BooleanFunction& p, int l, int j);

}  // namespace pivotlab

#pragma once

// Boolean functions in algebraic normal form over GF(2).
//
// A function on n <= 31 variables is a sorted, duplicate-free list of
// monomials; each monomial is a bitmask with bit i set when x_i occurs.
// The empty mask is the constant term 1.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pivotlab {

using Mask = std::uint32_t;

inline constexpr int kMaxVars = 31;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr Mask low_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr int popcount(Mask m) { return std::popcount(m); }

class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(Mask vars) : vars_(vars) {}
  Monomial(std::initializer_list<int> vars);

  constexpr Mask vars() const { return vars_; }
  constexpr int degree() const { return std::popcount(vars_); }
  constexpr bool contains(int i) const { return (vars_ >> i) & 1U; }
  constexpr bool divides(Monomial other) const { return (vars_ & other.vars_) == vars_; }

  friend constexpr Monomial operator*(Monomial a, Monomial b) { return Monomial(a.vars_ | b.vars_); }
  friend constexpr bool operator==(Monomial, Monomial) = default;

 private:
  Mask vars_ = 0;
};

class BooleanFunction {
 public:
  BooleanFunction() = default;
  explicit BooleanFunction(int n);
  // Terms are summed over GF(2): repeated masks cancel in pairs.
  BooleanFunction(int n, std::vector<Mask> terms);

  static BooleanFunction constant(int n, bool value);
  static BooleanFunction variable(int n, int i);
  static BooleanFunction monomial(int n, Monomial m);
  // Inverse Moebius transform of a length-2^n 0/1 table.
  static BooleanFunction from_truth_table(int n, std::span<const std::uint8_t> table);

  int n() const { return n_; }
  std::span<const Mask> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // 0 for the zero function.
  int degree() const;
  bool is_affine() const { return degree() <= 1; }
  bool depends_on(int i) const;
  Mask support() const;

  bool evaluate(Mask x) const;
  std::vector<std::uint8_t> truth_table() const;

  BooleanFunction& operator+=(const BooleanFunction& other);
  friend BooleanFunction operator+(BooleanFunction a, const BooleanFunction& b) { return a += b; }
  friend BooleanFunction operator*(const BooleanFunction& a, const BooleanFunction& b);
  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> terms_;
};

BooleanFunction add(const BooleanFunction& f, const BooleanFunction& g);
BooleanFunction multiply(const BooleanFunction& f, const BooleanFunction& g);

// f with x_i fixed to a; the result does not depend on x_i.
BooleanFunction restrict_var(const BooleanFunction& f, int i, bool a);

// All terms of f that multiply x_i, with x_i removed.
BooleanFunction neighbourhood(const BooleanFunction& f, int i);

// g is a term of the ANF of f.
bool contains_term(const BooleanFunction& f, Monomial g);
// Some monomial r has g*r as a term of f (r = 1 allowed).
bool is_multiplying_term(const BooleanFunction& f, Monomial g);
// f depends on every variable of g.
bool depends_on(const BooleanFunction& f, Monomial g);

// Drops the constant and linear terms.
BooleanFunction strip_affine(const BooleanFunction& f);

// Complete-bipartite-plus-clique skeleton on (x_0..x_{t-1}) x (x_t..x_{n-1}),
// plus the clique on x_t..x_{n-1}, plus h (on the first t variables) and an
// affine a.
BooleanFunction family_member(int n, int t, const BooleanFunction& h, const BooleanFunction& a);

// "n=<int>; x0*x1+x2+1". An empty term list or "0" is the zero function.
BooleanFunction parse_anf(std::string_view text);
std::string format_anf(const BooleanFunction& f);
// The term list only, "x0*x1+x1*x2"; "0" for the zero function.
std::string format_terms(const BooleanFunction& f);

}  // namespace pivotlab

#pragma once

// Functions GF(2)^n -> Z4 stored as dense tables.
//
// Boolean values enter Z4 through the embedding [0] = 0, [1] = 1; a Boolean
// expression is reduced over GF(2) before it is embedded.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pivotlab/anf.hpp"

namespace pivotlab {

class Z4Function {
 public:
  Z4Function() = default;
  // The zero function on n variables.
  explicit Z4Function(int n);

  // coeff * [p] (mod 4). lift(p) is the usual 2p lifting.
  static Z4Function embed(const BooleanFunction& p, int coeff = 1);
  static Z4Function lift(const BooleanFunction& p) { return embed(p, 2); }
  static Z4Function from_fn(int n, const std::function<int(Mask)>& fn);

  int n() const { return n_; }
  std::uint8_t operator()(Mask x) const { return table_[x]; }
  std::span<const std::uint8_t> table() const { return table_; }

  // p with x_j fixed to a, viewed again as a function on all n variables.
  Z4Function restricted(int j, bool a) const;

  Z4Function& operator+=(const Z4Function& other);
  friend Z4Function operator+(Z4Function a, const Z4Function& b) { return a += b; }
  friend Z4Function operator*(int c, Z4Function f);
  friend bool operator==(const Z4Function&, const Z4Function&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> table_;
};

// sum_k coeff * [f_k] with every f_k embedded separately before the Z4 sum.
Z4Function embedded_sum(int n, std::span<const BooleanFunction> parts, int coeff);

}  // namespace pivotlab

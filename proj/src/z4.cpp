#include "pivotlab/z4.hpp"

#include <string>

#include "pivotlab/error.hpp"

namespace pivotlab {

namespace {

constexpr int kMaxTableVars = 24;

std::uint8_t mod4(int v) { return static_cast<std::uint8_t>(((v % 4) + 4) % 4); }

}  // namespace

Z4Function::Z4Function(int n) : n_(n) {
  if (n < 0 || n > kMaxTableVars) throw BudgetError("Z4 tables limited to n <= 24");
  table_.assign(std::size_t{1} << n, 0);
}

Z4Function Z4Function::embed(const BooleanFunction& p, int coeff) {
  Z4Function f(p.n());
  const auto tt = p.truth_table();
  const std::uint8_t c = mod4(coeff);
  for (std::size_t x = 0; x < tt.size(); ++x) f.table_[x] = tt[x] ? c : 0;
  return f;
}

Z4Function Z4Function::from_fn(int n, const std::function<int(Mask)>& fn) {
  Z4Function f(n);
  for (std::size_t x = 0; x < f.table_.size(); ++x) f.table_[x] = mod4(fn(static_cast<Mask>(x)));
  return f;
}

Z4Function Z4Function::restricted(int j, bool a) const {
  if (j < 0 || j >= n_) throw RangeError("variable index " + std::to_string(j) + " out of range");
  Z4Function r(n_);
  for (std::size_t x = 0; x < table_.size(); ++x) {
    const Mask y = a ? (static_cast<Mask>(x) | bit(j)) : (static_cast<Mask>(x) & ~bit(j));
    r.table_[x] = table_[y];
  }
  return r;
}

Z4Function& Z4Function::operator+=(const Z4Function& other) {
  if (n_ != other.n_) throw DimensionError("mismatched Z4 function sizes");
  for (std::size_t x = 0; x < table_.size(); ++x) table_[x] = (table_[x] + other.table_[x]) & 3U;
  return *this;
}

Z4Function operator*(int c, Z4Function f) {
  const int k = mod4(c);
  for (auto& v : f.table_) v = static_cast<std::uint8_t>((v * k) & 3);
  return f;
}

Z4Function embedded_sum(int n, std::span<const BooleanFunction> parts, int coeff) {
  Z4Function acc(n);
  for (const auto& part : parts) acc += Z4Function::embed(part, coeff);
  return acc;
}

}  // namespace pivotlab

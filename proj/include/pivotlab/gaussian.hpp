#pragma once

#include <cstdint>

namespace pivotlab {

// a + bi with integer parts.
struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr Gaussian() = default;
  constexpr Gaussian(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

  constexpr std::int64_t norm() const { return re * re + im * im; }
  constexpr Gaussian conj() const { return {re, -im}; }
  constexpr Gaussian times_i() const { return {-im, re}; }
  constexpr bool is_zero() const { return re == 0 && im == 0; }

  friend constexpr Gaussian operator+(Gaussian a, Gaussian b) { return {a.re + b.re, a.im + b.im}; }
  friend constexpr Gaussian operator-(Gaussian a, Gaussian b) { return {a.re - b.re, a.im - b.im}; }
  friend constexpr Gaussian operator-(Gaussian a) { return {-a.re, -a.im}; }
  friend constexpr Gaussian operator*(Gaussian a, Gaussian b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  constexpr Gaussian& operator+=(Gaussian b) { return *this = *this + b; }
  friend constexpr bool operator==(Gaussian, Gaussian) = default;
};

// i^k for any integer k.
constexpr Gaussian i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// Exact division by 1 + i; false when the quotient is not a Gaussian integer.
constexpr bool divide_one_plus_i(Gaussian z, Gaussian& out) {
  // z / (1+i) = z (1-i) / 2
  const std::int64_t re = z.re + z.im;
  const std::int64_t im = z.im - z.re;
  if (re % 2 != 0 || im % 2 != 0) return false;
  out = {re / 2, im / 2};
  return true;
}

}  // namespace pivotlab

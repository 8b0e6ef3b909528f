#pragma once

// Slow, independent reference computations used as test oracles. None of
// them call into the library's transform, pivot or rank code.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

// f(x) for a term list where each term is a bitmask of variables.
inline int eval_terms(const std::vector<std::uint32_t>& terms, std::uint32_t x) {
  int v = 0;
  for (std::uint32_t t : terms) v ^= ((x & t) == t) ? 1 : 0;
  return v;
}

// Spectrum of (-1)^f under kernels given by a string over {I,H,N}, by the
// full sum over inputs (2^n * 2^n terms).
inline std::vector<std::complex<double>> spectrum(const std::vector<std::uint32_t>& terms, const std::string& spec) {
  const int n = static_cast<int>(spec.size());
  const std::size_t size = std::size_t{1} << n;
  const double r = 1.0 / std::sqrt(2.0);
  const std::complex<double> I(0, 1);
  std::vector<std::complex<double>> out(size);
  for (std::size_t k = 0; k < size; ++k) {
    std::complex<double> sum = 0;
    for (std::size_t x = 0; x < size; ++x) {
      std::complex<double> w = 1;
      for (int i = 0; i < n && w != 0.0; ++i) {
        const int ki = (k >> i) & 1;
        const int xi = (x >> i) & 1;
        switch (spec[static_cast<std::size_t>(i)]) {
          case 'I': w *= (ki == xi) ? 1.0 : 0.0; break;
          case 'H': w *= r * ((ki & xi) ? -1.0 : 1.0); break;
          default: w *= r * (xi == 0 ? std::complex<double>(1) : (ki == 0 ? I : -I)); break;
        }
      }
      sum += w * (eval_terms(terms, static_cast<std::uint32_t>(x)) ? -1.0 : 1.0);
    }
    out[k] = sum;
  }
  return out;
}

inline bool flat(const std::vector<std::complex<double>>& v) {
  const double m = std::norm(v[0]);
  return std::all_of(v.begin(), v.end(), [&](auto c) { return std::abs(std::norm(c) - m) < 1e-9; });
}

inline std::vector<std::string> all_specs(int n, const std::string& alphabet) {
  std::vector<std::string> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : alphabet) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

inline int count_flat(const std::vector<std::uint32_t>& terms, int n, const std::string& alphabet) {
  int c = 0;
  for (const auto& s : all_specs(n, alphabet)) c += flat(spectrum(terms, s));
  return c;
}

// Adjacency matrices.
inline Matrix empty(int n) { return Matrix(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0)); }

inline Matrix local_complement(Matrix a, int v) {
  const int n = static_cast<int>(a.size());
  std::vector<int> nb;
  for (int w = 0; w < n; ++w)
    if (a[v][w]) nb.push_back(w);
  for (int x : nb)
    for (int y : nb)
      if (x < y) {
        a[x][y] ^= 1;
        a[y][x] ^= 1;
      }
  return a;
}

// LC(u) LC(v) LC(u): pivot followed by exchanging the labels of u and v.
inline Matrix pivot_with_swap(const Matrix& a, int u, int v) {
  return local_complement(local_complement(local_complement(a, u), v), u);
}

inline Matrix swap_labels(Matrix a, int u, int v) {
  std::swap(a[static_cast<std::size_t>(u)], a[static_cast<std::size_t>(v)]);
  for (auto& row : a) std::swap(row[static_cast<std::size_t>(u)], row[static_cast<std::size_t>(v)]);
  return a;
}

inline int rank_gf2(std::vector<std::vector<int>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && !m[p][c]) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < rows; ++r)
      if (r != rank && m[r][c])
        for (int k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle

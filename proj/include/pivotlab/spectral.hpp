#pragma once

// Exact {I,H,N}^n transforms of phase vectors.
//
// Vectors hold Gaussian integers and a deferred exponent q: the true vector
// is amps * 2^(-q/2). Kernels are applied unnormalised,
//   H: (a, b) -> (a + b, a - b)      N: (a, b) -> (a + ib, a - ib),
// and each one raises q by 1.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pivotlab/anf.hpp"
#include "pivotlab/gaussian.hpp"
#include "pivotlab/graph.hpp"
#include "pivotlab/z4.hpp"

namespace pivotlab {

enum class Kernel : std::uint8_t { I = 0, H = 1, N = 2 };

char kernel_char(Kernel k);

class TransformSpec {
 public:
  TransformSpec() = default;
  // All-identity spec.
  explicit TransformSpec(int n);
  explicit TransformSpec(std::vector<Kernel> kinds);
  // "IHNI...": character k gives the kernel at variable k.
  static TransformSpec parse(std::string_view text);
  // H at the positions of `h`, N at the positions of `nn`; the sets must be disjoint.
  static TransformSpec from_masks(int n, Mask h, Mask nn);

  int n() const { return static_cast<int>(kinds_.size()); }
  Kernel operator[](int i) const { return kinds_[static_cast<std::size_t>(i)]; }
  void set(int i, Kernel k) { kinds_[static_cast<std::size_t>(i)] = k; }
  Mask h_mask() const;
  Mask n_mask() const;
  std::string to_string() const;

  friend bool operator==(const TransformSpec&, const TransformSpec&) = default;

 private:
  std::vector<Kernel> kinds_;
};

class SpectralVector {
 public:
  SpectralVector() = default;
  SpectralVector(int n, std::vector<Gaussian> amps, int half_pow = 0);

  int n() const { return n_; }
  int half_pow() const { return half_pow_; }
  const std::vector<Gaussian>& amps() const { return amps_; }
  std::vector<Gaussian>& mutable_amps() { return amps_; }
  void set_half_pow(int q) { half_pow_ = q; }
  Gaussian operator[](Mask x) const { return amps_[x]; }

  // sum |amp|^2 (the true squared norm times 2^q).
  std::int64_t raw_norm() const;

 private:
  int n_ = 0;
  std::vector<Gaussian> amps_;
  int half_pow_ = 0;
};

// amps_k = (-1)^{p(k)}.
SpectralVector bipolar(const BooleanFunction& p);
// amps_k = [m(k)] i^{p(k)}.
SpectralVector phase_vector(const BooleanFunction& m, const Z4Function& p);

void apply_kernel_inplace(SpectralVector& s, int i, Kernel k);
SpectralVector apply_kernel(SpectralVector s, int i, Kernel k);
SpectralVector apply(SpectralVector s, const TransformSpec& t);

// All squared magnitudes equal.
bool is_flat(const SpectralVector& s);

// a and b describe the same complex vector once the 2^(-q/2) factors are
// taken into account.
bool same_vector(const SpectralVector& a, const SpectralVector& b);

enum class Family { IH, IHN, HN };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view text);
// Number of specs in the family for n variables.
std::uint64_t family_size(Family f, int n);

struct FlatCountOptions {
  int threads = 0;
  // Witness specs to keep, in enumeration order (position 0 varies slowest,
  // kernels in the order I, H, N).
  std::size_t max_witnesses = 0;
  // Largest n accepted for the direct sweep; 0 uses the family default
  // (IH and HN: 14, IHN: 9).
  int max_n = 0;
};

struct FlatCount {
  std::uint64_t count = 0;
  std::uint64_t specs = 0;
  std::vector<TransformSpec> witnesses;
};

int default_direct_limit(Family f);

// Direct sweep over the family by exact transforms. Specs sharing a prefix
// share the partially transformed vector. Throws BudgetError above max_n.
FlatCount count_flat(const BooleanFunction& p, Family family, const FlatCountOptions& options = {});

// GF(2) rank criterion for quadratics: with Gamma' = Gamma plus ones on the
// diagonal at N positions, the spec is flat iff the principal submatrix of
// Gamma' on R_H u R_N is nonsingular.
bool is_flat_quadratic(const Graph& g, const TransformSpec& t);
bool is_flat_quadratic(const Graph& g, Mask h, Mask nn);
FlatCount count_flat_quadratic(const Graph& g, Family family, const FlatCountOptions& options = {});

// Rank over GF(2) of a list of bit rows.
int gf2_rank(std::vector<Mask> rows);

// Sets X of H positions (with I elsewhere) whose transform of (-1)^p is flat,
// as bitmasks in increasing order. Exact transforms, n <= 14.
std::vector<Mask> flat_h_sets(const BooleanFunction& p);

}  // namespace pivotlab

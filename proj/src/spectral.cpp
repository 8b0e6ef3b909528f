#include "pivotlab/spectral.hpp"

#include <algorithm>
#include <string>

#include "pivotlab/error.hpp"
#include "pivotlab/parallel.hpp"

namespace pivotlab {

namespace {

constexpr int kMaxVectorVars = 24;

void check_position(int n, int i) {
  if (i < 0 || i >= n) throw RangeError("transform position " + std::to_string(i) + " out of range");
}

// One kernel pass from src into dst (which may alias src).
void butterfly(const Gaussian* src, Gaussian* dst, std::size_t size, int i, Kernel k) {
  const std::size_t b = std::size_t{1} << i;
  for (std::size_t hi = 0; hi < size; hi += 2 * b) {
    for (std::size_t x = hi; x < hi + b; ++x) {
      const Gaussian a = src[x];
      const Gaussian c = k == Kernel::H ? src[x + b] : src[x + b].times_i();
      dst[x] = a + c;
      dst[x + b] = a - c;
    }
  }
}

bool flat_amps(const Gaussian* amps, std::size_t size) {
  const std::int64_t first = amps[0].norm();
  for (std::size_t x = 1; x < size; ++x) {
    if (amps[x].norm() != first) return false;
  }
  return true;
}

std::vector<Kernel> family_kernels(Family f) {
  switch (f) {
    case Family::IH: return {Kernel::I, Kernel::H};
    case Family::IHN: return {Kernel::I, Kernel::H, Kernel::N};
    case Family::HN: return {Kernel::H, Kernel::N};
  }
  return {};
}

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

// Spec number idx of the family, position 0 as the most significant digit.
TransformSpec spec_at(const std::vector<Kernel>& kernels, int n, std::uint64_t idx) {
  TransformSpec t(n);
  const std::uint64_t base = kernels.size();
  for (int pos = n - 1; pos >= 0; --pos) {
    t.set(pos, kernels[idx % base]);
    idx /= base;
  }
  return t;
}

struct SweepResult {
  std::uint64_t count = 0;
  std::vector<TransformSpec> witnesses;
};

class FlatSweep {
 public:
  FlatSweep(int n, const std::vector<Kernel>& kernels, std::size_t max_witnesses)
      : n_(n), size_(std::size_t{1} << n), kernels_(kernels), max_witnesses_(max_witnesses),
        spec_(n), bufs_(static_cast<std::size_t>(n)) {
    for (auto& b : bufs_) b.resize(size_);
  }

  // Enumerates positions depth..n-1 below the vector `src`, with positions
  // before depth already fixed in spec_.
  void run(const Gaussian* src, int depth, SweepResult& out) {
    if (depth == n_) {
      if (flat_amps(src, size_)) {
        ++out.count;
        if (out.witnesses.size() < max_witnesses_) out.witnesses.push_back(spec_);
      }
      return;
    }
    for (Kernel k : kernels_) {
      spec_.set(depth, k);
      if (k == Kernel::I) {
        run(src, depth + 1, out);
      } else {
        Gaussian* dst = bufs_[static_cast<std::size_t>(depth)].data();
        butterfly(src, dst, size_, depth, k);
        run(dst, depth + 1, out);
      }
    }
  }

  TransformSpec& spec() { return spec_; }

 private:
  int n_;
  std::size_t size_;
  std::vector<Kernel> kernels_;
  std::size_t max_witnesses_;
  TransformSpec spec_;
  std::vector<std::vector<Gaussian>> bufs_;
};

int choose_prefix(int n, std::size_t branching, int threads) {
  if (threads <= 1) return 0;
  int k = 0;
  std::uint64_t tasks = 1;
  while (k < n && tasks < static_cast<std::uint64_t>(threads) * 8) {
    tasks *= branching;
    ++k;
  }
  return k;
}

}  // namespace

char kernel_char(Kernel k) {
  switch (k) {
    case Kernel::I: return 'I';
    case Kernel::H: return 'H';
    case Kernel::N: return 'N';
  }
  return '?';
}

TransformSpec::TransformSpec(int n) {
  if (n < 0 || n > kMaxVars) throw RangeError("transform size outside [0, 31]");
  kinds_.assign(static_cast<std::size_t>(n), Kernel::I);
}

TransformSpec::TransformSpec(std::vector<Kernel> kinds) : kinds_(std::move(kinds)) {
  if (kinds_.size() > static_cast<std::size_t>(kMaxVars)) throw RangeError("transform size outside [0, 31]");
}

TransformSpec TransformSpec::parse(std::string_view text) {
  std::vector<Kernel> kinds;
  for (char c : text) {
    switch (c) {
      case 'I': case 'i': kinds.push_back(Kernel::I); break;
      case 'H': case 'h': kinds.push_back(Kernel::H); break;
      case 'N': case 'n': kinds.push_back(Kernel::N); break;
      default: throw ParseError(std::string("bad transform character '") + c + "'");
    }
  }
  return TransformSpec(std::move(kinds));
}

TransformSpec TransformSpec::from_masks(int n, Mask h, Mask nn) {
  if ((h & nn) != 0) throw std::invalid_argument("H and N position sets overlap");
  if (((h | nn) & ~low_mask(n)) != 0) throw RangeError("transform position out of range");
  TransformSpec t(n);
  for (int i = 0; i < n; ++i) {
    if (h & bit(i)) t.set(i, Kernel::H);
    if (nn & bit(i)) t.set(i, Kernel::N);
  }
  return t;
}

Mask TransformSpec::h_mask() const {
  Mask m = 0;
  for (int i = 0; i < n(); ++i) {
    if ((*this)[i] == Kernel::H) m |= bit(i);
  }
  return m;
}

Mask TransformSpec::n_mask() const {
  Mask m = 0;
  for (int i = 0; i < n(); ++i) {
    if ((*this)[i] == Kernel::N) m |= bit(i);
  }
  return m;
}

std::string TransformSpec::to_string() const {
  std::string s;
  for (Kernel k : kinds_) s += kernel_char(k);
  return s;
}

SpectralVector::SpectralVector(int n, std::vector<Gaussian> amps, int half_pow)
    : n_(n), amps_(std::move(amps)), half_pow_(half_pow) {
  if (n < 0 || n > kMaxVectorVars) throw BudgetError("spectral vectors limited to n <= 24");
  if (amps_.size() != (std::size_t{1} << n)) throw DimensionError("spectral vector length must be 2^n");
}

std::int64_t SpectralVector::raw_norm() const {
  std::int64_t total = 0;
  for (const auto& a : amps_) total += a.norm();
  return total;
}

SpectralVector bipolar(const BooleanFunction& p) {
  if (p.n() > kMaxVectorVars) throw BudgetError("spectral vectors limited to n <= 24");
  const auto tt = p.truth_table();
  std::vector<Gaussian> amps(tt.size());
  for (std::size_t x = 0; x < tt.size(); ++x) amps[x] = tt[x] ? Gaussian(-1) : Gaussian(1);
  return SpectralVector(p.n(), std::move(amps));
}

SpectralVector phase_vector(const BooleanFunction& m, const Z4Function& p) {
  if (m.n() != p.n()) throw DimensionError("mask and phase functions have different n");
  const auto tt = m.truth_table();
  std::vector<Gaussian> amps(tt.size());
  for (std::size_t x = 0; x < tt.size(); ++x) {
    amps[x] = tt[x] ? i_pow(p(static_cast<Mask>(x))) : Gaussian(0);
  }
  return SpectralVector(m.n(), std::move(amps));
}

void apply_kernel_inplace(SpectralVector& s, int i, Kernel k) {
  check_position(s.n(), i);
  if (k == Kernel::I) return;
  auto& amps = s.mutable_amps();
  butterfly(amps.data(), amps.data(), amps.size(), i, k);
  s.set_half_pow(s.half_pow() + 1);
}

SpectralVector apply_kernel(SpectralVector s, int i, Kernel k) {
  apply_kernel_inplace(s, i, k);
  return s;
}

SpectralVector apply(SpectralVector s, const TransformSpec& t) {
  if (t.n() != s.n()) throw DimensionError("transform and vector sizes differ");
  for (int i = 0; i < t.n(); ++i) apply_kernel_inplace(s, i, t[i]);
  return s;
}

bool is_flat(const SpectralVector& s) { return flat_amps(s.amps().data(), s.amps().size()); }

bool same_vector(const SpectralVector& a, const SpectralVector& b) {
  if (a.n() != b.n()) return false;
  const auto& x = a.amps();
  const auto& y = b.amps();
  const int d = a.half_pow() - b.half_pow();
  if (d % 2 != 0) {
    // sqrt(2) is irrational: only the zero vector matches.
    auto zero = [](const std::vector<Gaussian>& v) {
      return std::all_of(v.begin(), v.end(), [](Gaussian g) { return g.is_zero(); });
    };
    return zero(x) && zero(y);
  }
  // x * 2^{-qa/2} == y * 2^{-qb/2}  <=>  x * 2^{qb/2} == y * 2^{qa/2} after cancelling.
  const std::int64_t fx = d < 0 ? std::int64_t{1} << (-d / 2) : 1;
  const std::int64_t fy = d > 0 ? std::int64_t{1} << (d / 2) : 1;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] * Gaussian(fx) != y[k] * Gaussian(fy)) return false;
  }
  return true;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::IH: return "IH";
    case Family::IHN: return "IHN";
    case Family::HN: return "HN";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  if (text == "IH") return Family::IH;
  if (text == "IHN") return Family::IHN;
  if (text == "HN") return Family::HN;
  return std::nullopt;
}

std::uint64_t family_size(Family f, int n) { return ipow(family_kernels(f).size(), n); }

int default_direct_limit(Family f) { return f == Family::IHN ? 9 : 14; }

FlatCount count_flat(const BooleanFunction& p, Family family, const FlatCountOptions& options) {
  const int n = p.n();
  const int limit = options.max_n > 0 ? options.max_n : default_direct_limit(family);
  if (n > limit) {
    throw BudgetError("direct " + std::string(family_name(family)) + " sweep limited to n <= " +
                      std::to_string(limit));
  }
  if (n > kMaxVectorVars) throw BudgetError("spectral vectors limited to n <= 24");
  const auto kernels = family_kernels(family);
  const SpectralVector start = bipolar(p);
  FlatCount result;
  result.specs = family_size(family, n);
  const int threads = resolve_threads(options.threads);
  const int prefix = choose_prefix(n, kernels.size(), threads);
  const std::uint64_t tasks = ipow(kernels.size(), prefix);
  std::vector<SweepResult> parts(tasks);
  parallel_for(tasks, threads, [&](std::size_t task) {
    FlatSweep sweep(n, kernels, options.max_witnesses);
    SpectralVector v = start;
    const TransformSpec head = spec_at(kernels, prefix, task);
    for (int i = 0; i < prefix; ++i) {
      apply_kernel_inplace(v, i, head[i]);
      sweep.spec().set(i, head[i]);
    }
    sweep.run(v.amps().data(), prefix, parts[task]);
  });
  for (auto& part : parts) {
    result.count += part.count;
    for (auto& w : part.witnesses) {
      if (result.witnesses.size() < options.max_witnesses) result.witnesses.push_back(std::move(w));
    }
  }
  return result;
}

int gf2_rank(std::vector<Mask> rows) {
  int rank = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Mask pivot_row = rows[r];
    if (pivot_row == 0) continue;
    ++rank;
    const Mask low = pivot_row & -pivot_row;
    for (std::size_t s = r + 1; s < rows.size(); ++s) {
      if (rows[s] & low) rows[s] ^= pivot_row;
    }
  }
  return rank;
}

bool is_flat_quadratic(const Graph& g, Mask h, Mask nn) {
  const Mask s = h | nn;
  Mask rows[Graph::kMaxVertices];
  int count = 0;
  for (Mask r = s; r; r &= r - 1) {
    const int i = std::countr_zero(r);
    rows[count++] = (g.row(i) & s) | (nn & bit(i));
  }
  // Nonsingular iff elimination finds a pivot in every row.
  for (int r = 0; r < count; ++r) {
    const Mask pivot_row = rows[r];
    if (pivot_row == 0) return false;
    const Mask low = pivot_row & -pivot_row;
    for (int q = r + 1; q < count; ++q) {
      if (rows[q] & low) rows[q] ^= pivot_row;
    }
  }
  return true;
}

bool is_flat_quadratic(const Graph& g, const TransformSpec& t) {
  if (t.n() != g.n()) throw DimensionError("transform and graph sizes differ");
  return is_flat_quadratic(g, t.h_mask(), t.n_mask());
}

FlatCount count_flat_quadratic(const Graph& g, Family family, const FlatCountOptions& options) {
  const int n = g.n();
  const int limit = options.max_n > 0 ? options.max_n : (family == Family::IHN ? 16 : 26);
  if (n > limit) {
    throw BudgetError("rank sweep over " + std::string(family_name(family)) + " limited to n <= " +
                      std::to_string(limit));
  }
  const auto kernels = family_kernels(family);
  const std::uint64_t total = family_size(family, n);
  const int threads = resolve_threads(options.threads);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, total / (static_cast<std::uint64_t>(threads) * 16));
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<SweepResult> parts(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t lo = c * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    auto& out = parts[c];
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      Mask h = 0;
      Mask nn = 0;
      std::uint64_t rest = idx;
      for (int pos = n - 1; pos >= 0; --pos) {
        const Kernel k = kernels[rest % kernels.size()];
        rest /= kernels.size();
        if (k == Kernel::H) h |= bit(pos);
        if (k == Kernel::N) nn |= bit(pos);
      }
      if (is_flat_quadratic(g, h, nn)) {
        ++out.count;
        if (out.witnesses.size() < options.max_witnesses) out.witnesses.push_back(TransformSpec::from_masks(n, h, nn));
      }
    }
  });
  FlatCount result;
  result.specs = total;
  for (auto& part : parts) {
    result.count += part.count;
    for (auto& w : part.witnesses) {
      if (result.witnesses.size() < options.max_witnesses) result.witnesses.push_back(std::move(w));
    }
  }
  return result;
}

std::vector<Mask> flat_h_sets(const BooleanFunction& p) {
  FlatCountOptions opts;
  opts.threads = 1;
  opts.max_witnesses = std::size_t{1} << p.n();
  const FlatCount fc = count_flat(p, Family::IH, opts);
  std::vector<Mask> out;
  out.reserve(fc.witnesses.size());
  for (const auto& w : fc.witnesses) out.push_back(w.h_mask());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pivotlab

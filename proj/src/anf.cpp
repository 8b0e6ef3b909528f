#include "pivotlab/anf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "pivotlab/error.hpp"

namespace pivotlab {

namespace {

void check_n(int n) {
  if (n < 0 || n > kMaxVars) {
    throw RangeError("variable count " + std::to_string(n) + " outside [0, 31]");
  }
}

void check_var(int n, int i) {
  if (i < 0 || i >= n) {
    throw RangeError("variable index " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
  }
}

void check_same_n(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.n() != g.n()) {
    throw DimensionError("mismatched variable counts " + std::to_string(f.n()) + " and " +
                         std::to_string(g.n()));
  }
}

// Sorts and cancels equal masks pairwise.
std::vector<Mask> reduce_terms(std::vector<Mask> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Mask> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

// Graded order for printing: by degree, then by the ascending variable list.
bool print_order(Mask a, Mask b) {
  if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace

Monomial::Monomial(std::initializer_list<int> vars) {
  for (int v : vars) {
    if (v < 0 || v >= kMaxVars) throw RangeError("monomial variable out of range");
    vars_ |= bit(v);
  }
}

BooleanFunction::BooleanFunction(int n) : n_(n) { check_n(n); }

BooleanFunction::BooleanFunction(int n, std::vector<Mask> terms) : n_(n) {
  check_n(n);
  const Mask allowed = low_mask(n);
  for (Mask t : terms) {
    if ((t & ~allowed) != 0) {
      throw RangeError("term uses a variable index >= n = " + std::to_string(n));
    }
  }
  terms_ = reduce_terms(std::move(terms));
}

BooleanFunction BooleanFunction::constant(int n, bool value) {
  return value ? BooleanFunction(n, {0}) : BooleanFunction(n);
}

BooleanFunction BooleanFunction::variable(int n, int i) {
  check_n(n);
  check_var(n, i);
  return BooleanFunction(n, {bit(i)});
}

BooleanFunction BooleanFunction::monomial(int n, Monomial m) { return BooleanFunction(n, {m.vars()}); }

BooleanFunction BooleanFunction::from_truth_table(int n, std::span<const std::uint8_t> table) {
  check_n(n);
  if (n > 24) throw BudgetError("truth tables limited to n <= 24");
  const std::size_t size = std::size_t{1} << n;
  if (table.size() != size) throw DimensionError("truth table length must be 2^n");
  std::vector<std::uint8_t> t(table.begin(), table.end());
  for (int i = 0; i < n; ++i) {
    const std::size_t b = std::size_t{1} << i;
    for (std::size_t x = 0; x < size; ++x) {
      if (x & b) t[x] ^= t[x ^ b];
    }
  }
  BooleanFunction f(n);
  for (std::size_t x = 0; x < size; ++x) {
    if (t[x] & 1U) f.terms_.push_back(static_cast<Mask>(x));
  }
  return f;
}

int BooleanFunction::degree() const {
  int d = 0;
  for (Mask t : terms_) d = std::max(d, popcount(t));
  return d;
}

bool BooleanFunction::depends_on(int i) const { return (support() >> i) & 1U; }

Mask BooleanFunction::support() const {
  Mask s = 0;
  for (Mask t : terms_) s |= t;
  return s;
}

bool BooleanFunction::evaluate(Mask x) const {
  bool v = false;
  for (Mask t : terms_) v ^= (t & ~x) == 0;
  return v;
}

std::vector<std::uint8_t> BooleanFunction::truth_table() const {
  if (n_ > 24) throw BudgetError("truth tables limited to n <= 24");
  const std::size_t size = std::size_t{1} << n_;
  std::vector<std::uint8_t> t(size, 0);
  for (Mask m : terms_) t[m] ^= 1;
  // Moebius transform: t[x] = sum over monomials m subset of x.
  for (int i = 0; i < n_; ++i) {
    const std::size_t b = std::size_t{1} << i;
    for (std::size_t x = 0; x < size; ++x) {
      if (x & b) t[x] ^= t[x ^ b];
    }
  }
  return t;
}

BooleanFunction& BooleanFunction::operator+=(const BooleanFunction& other) {
  check_same_n(*this, other);
  std::vector<Mask> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                std::back_inserter(out));
  terms_ = std::move(out);
  return *this;
}

BooleanFunction operator*(const BooleanFunction& a, const BooleanFunction& b) {
  check_same_n(a, b);
  std::vector<Mask> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (Mask s : a.terms_) {
    for (Mask t : b.terms_) prod.push_back(s | t);
  }
  BooleanFunction r(a.n_);
  r.terms_ = reduce_terms(std::move(prod));
  return r;
}

BooleanFunction add(const BooleanFunction& f, const BooleanFunction& g) { return f + g; }

BooleanFunction multiply(const BooleanFunction& f, const BooleanFunction& g) { return f * g; }

BooleanFunction restrict_var(const BooleanFunction& f, int i, bool a) {
  check_var(f.n(), i);
  std::vector<Mask> out;
  out.reserve(f.term_count());
  for (Mask t : f.terms()) {
    if (!(t & bit(i))) {
      out.push_back(t);
    } else if (a) {
      out.push_back(t & ~bit(i));
    }
  }
  return BooleanFunction(f.n(), std::move(out));
}

BooleanFunction neighbourhood(const BooleanFunction& f, int i) {
  check_var(f.n(), i);
  std::vector<Mask> out;
  for (Mask t : f.terms()) {
    if (t & bit(i)) out.push_back(t & ~bit(i));
  }
  return BooleanFunction(f.n(), std::move(out));
}

bool contains_term(const BooleanFunction& f, Monomial g) {
  if ((g.vars() & ~low_mask(f.n())) != 0) throw RangeError("monomial outside the variable range");
  return std::binary_search(f.terms().begin(), f.terms().end(), g.vars());
}

bool is_multiplying_term(const BooleanFunction& f, Monomial g) {
  if ((g.vars() & ~low_mask(f.n())) != 0) throw RangeError("monomial outside the variable range");
  return std::any_of(f.terms().begin(), f.terms().end(), [&](Mask t) { return (t & g.vars()) == g.vars(); });
}

bool depends_on(const BooleanFunction& f, Monomial g) { return (f.support() & g.vars()) == g.vars(); }

BooleanFunction strip_affine(const BooleanFunction& f) {
  std::vector<Mask> out;
  for (Mask t : f.terms()) {
    if (popcount(t) >= 2) out.push_back(t);
  }
  return BooleanFunction(f.n(), std::move(out));
}

BooleanFunction family_member(int n, int t, const BooleanFunction& h, const BooleanFunction& a) {
  check_n(n);
  if (t < 0 || t > n - 1) throw RangeError("family parameter t must satisfy 0 <= t <= n-1");
  if (h.n() != n || a.n() != n) throw DimensionError("family member parts must have n variables");
  if ((h.support() & ~low_mask(t)) != 0) throw std::invalid_argument("h may only use x_0 .. x_{t-1}");
  if (a.degree() > 1) throw std::invalid_argument("the affine part must have degree <= 1");
  std::vector<Mask> terms;
  for (int i = 0; i < t; ++i) {
    for (int j = t; j < n; ++j) terms.push_back(bit(i) | bit(j));
  }
  for (int i = t; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) terms.push_back(bit(i) | bit(j));
  }
  return BooleanFunction(n, std::move(terms)) + h + a;
}

namespace {

class AnfParser {
 public:
  explicit AnfParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  BooleanFunction parse() {
    expect("n=");
    const int n = number();
    check_n(n);
    expect(";");
    std::vector<Mask> terms;
    if (at_end()) return BooleanFunction(n);
    if (s_.substr(pos_) == "0") return BooleanFunction(n);
    terms.push_back(term(n));
    while (!at_end()) {
      expect("+");
      terms.push_back(term(n));
    }
    return BooleanFunction(n, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }

  void expect(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) != 0) {
      throw ParseError("ANF parse error at offset " + std::to_string(pos_) + ": expected '" + std::string(tok) + "'");
    }
    pos_ += tok.size();
  }

  int number() {
    int v = 0;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first) {
      throw ParseError("ANF parse error at offset " + std::to_string(pos_) + ": expected a number");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  Mask term(int n) {
    if (!at_end() && s_[pos_] == '1') {
      ++pos_;
      return 0;
    }
    Mask m = 0;
    while (true) {
      expect("x");
      const int v = number();
      if (v < 0 || v >= n) throw ParseError("ANF variable x" + std::to_string(v) + " outside [0, n)");
      if (m & bit(v)) throw ParseError("duplicate variable x" + std::to_string(v) + " within a term");
      m |= bit(v);
      if (at_end() || s_[pos_] != '*') break;
      ++pos_;
    }
    return m;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

BooleanFunction parse_anf(std::string_view text) { return AnfParser(text).parse(); }

std::string format_terms(const BooleanFunction& f) {
  if (f.is_zero()) return "0";
  std::vector<Mask> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), print_order);
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) out += '+';
    Mask t = terms[k];
    if (t == 0) {
      out += '1';
      continue;
    }
    bool first = true;
    while (t) {
      if (!first) out += '*';
      first = false;
      out += 'x';
      out += std::to_string(std::countr_zero(t));
      t &= t - 1;
    }
  }
  return out;
}

std::string format_anf(const BooleanFunction& f) {
  return "n=" + std::to_string(f.n()) + "; " + format_terms(f);
}

}  // namespace pivotlab

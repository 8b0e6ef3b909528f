#include "pivotlab/tables.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "pivotlab/code.hpp"
#include "pivotlab/error.hpp"
#include "pivotlab/orbit.hpp"
#include "pivotlab/parallel.hpp"
#include "pivotlab/spectral.hpp"

namespace pivotlab {

namespace {

Rational make_rational(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

Rational count_value(std::uint64_t v) { return Rational{v, 1}; }

using Column = std::vector<const char*>;

// Golden columns, index n-1 (Table 1 starts at n=2, index n-2).
const std::map<int, std::map<std::string, Column>>& goldens() {
  static const std::map<int, std::map<std::string, Column>> g{
      {1,
       {{"random", {"1.500", "1.750", "1.390", "1.039", "1.000", "1.000", "1.000", "1.000"}},
        {"quad", {"1.500", "2.500", "4.438", "8.188", "15.486", "29.726", "57.918", "113.227"}}}},
      {2,
       {{"i_LC", {"1", "1", "1", "2", "4", "11", "26", "101", "440", "3,132", "40,457", "1,274,068"}},
        {"t_LC", {"1", "2", "3", "6", "11", "26", "59", "182", "675", "3,990", "45,144", "1,323,363"}}}},
      {3,
       {{"i_P", {"1", "1", "2", "4", "10", "35", "134", "777", "6,702", "104,825", "3,370,317", "231,557,290"}},
        {"t_P", {"1", "2", "4", "9", "21", "64", "218", "1,068", "8,038", "114,188", "3,493,965", "235,176,097"}},
        {"i_PB", {"1", "1", "1", "2", "3", "8", "15", "43", "110", "370", "1,260", "5,366", "25,684"}},
        {"t_PB", {"1", "2", "3", "6", "10", "22", "43", "104", "250", "720", "2,229", "8,361", "36,441"}}}},
      {4,
       {{"i_PB", {"1", "1", "1", "2", "3", "8", "15", "43", "110", "370", "1,260", "5,366", "25,684"}},
        {"i_C", {"1", "1", "2", "3", "6", "13", "30", "76", "220", "700", "2,520", "10,503", "51,368"}},
        {"i_C_iso", {"-", "1", "-", "1", "-", "3", "-", "10", "-", "40", "-", "229", "-"}}}},
      {5,
       {{"i_PL", {"1", "1", "2", "11", "119", "2,303", "80,923"}},
        {"t_PL", {"1", "2", "6", "29", "240", "3,623", "105,564"}},
        {"i_PBL", {"1", "1", "1", "4", "26", "251", "3,412"}},
        {"t_PBL", {"1", "2", "5", "18", "92", "693", "7,613"}}}},
  };
  return g;
}

const std::map<int, std::vector<std::pair<std::string, int>>>& column_limits() {
  static const std::map<int, std::vector<std::pair<std::string, int>>> l{
      {1, {{"random", 4}, {"quad", 6}}},
      {2, {{"i_LC", 8}, {"t_LC", 8}}},
      {3, {{"i_P", 8}, {"t_P", 8}, {"i_PB", 9}, {"t_PB", 9}}},
      {4, {{"i_PB", 9}, {"i_C", 9}, {"i_C_iso", 9}}},
      {5, {{"i_PL", 6}, {"t_PL", 6}, {"i_PBL", 7}, {"t_PBL", 7}}},
  };
  return l;
}

std::string strip_commas(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ','), s.end());
  return s;
}

bool golden_matches(const std::string& golden, const TableCell& cell) {
  // "-" marks a length with no such codes.
  if (golden == "-") return cell.value.num == 0;
  return strip_commas(golden) == cell.display();
}

BooleanFunction nonaffine_function(int n, const std::vector<Mask>& monomials, std::uint64_t pick) {
  std::vector<Mask> terms;
  for (std::size_t b = 0; b < monomials.size(); ++b)
    if ((pick >> b) & 1U) terms.push_back(monomials[b]);
  return BooleanFunction(n, std::move(terms));
}

std::vector<Mask> nonaffine_monomials(int n) {
  std::vector<Mask> out;
  for (Mask m = 0; m < bit(n); ++m)
    if (std::popcount(m) >= 2) out.push_back(m);
  return out;
}

std::uint64_t ih_count(const BooleanFunction& f) {
  FlatCountOptions o;
  o.threads = 1;
  return count_flat(f, Family::IH, o).count;
}

}  // namespace

std::string Rational::decimal(int digits) const {
  std::uint64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const std::uint64_t q = (2 * num * scale + den) / (2 * den);
  std::string whole = std::to_string(q / scale);
  if (digits == 0) return whole;
  std::string frac = std::to_string(q % scale);
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return whole + "." + frac;
}

std::vector<std::string> table_columns(int table) {
  const auto it = column_limits().find(table);
  if (it == column_limits().end()) throw std::invalid_argument("table must be 1..5");
  std::vector<std::string> out;
  for (const auto& [name, limit] : it->second) out.push_back(name);
  return out;
}

std::optional<std::string> table_golden(int table, const std::string& column, int n) {
  const auto t = goldens().find(table);
  if (t == goldens().end()) return std::nullopt;
  const auto c = t->second.find(column);
  if (c == t->second.end()) return std::nullopt;
  const int index = n - (table == 1 ? 2 : 1);
  if (index < 0 || index >= static_cast<int>(c->second.size())) return std::nullopt;
  return std::string(c->second[static_cast<std::size_t>(index)]);
}

int table_column_limit(int table, const std::string& column) {
  for (const auto& [name, limit] : column_limits().at(table))
    if (name == column) return limit;
  throw std::invalid_argument("unknown column " + column);
}

Rational average_flat_random(int n, int threads) {
  if (n < 1 || n > 5) throw BudgetError("exhaustive random average limited to n <= 5");
  const std::vector<Mask> monomials = nonaffine_monomials(n);
  const std::uint64_t functions = std::uint64_t{1} << monomials.size();
  const std::uint64_t chunk = 1024;
  const std::size_t chunks = static_cast<std::size_t>((functions + chunk - 1) / chunk);
  std::vector<std::uint64_t> sums(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t c) {
    std::uint64_t s = 0;
    const std::uint64_t end = std::min(functions, (c + 1) * chunk);
    for (std::uint64_t pick = c * chunk; pick < end; ++pick) s += ih_count(nonaffine_function(n, monomials, pick));
    sums[c] = s;
  });
  return make_rational(std::accumulate(sums.begin(), sums.end(), std::uint64_t{0}), functions);
}

Rational sample_flat_random(int n, std::uint64_t samples, std::uint64_t seed, int threads) {
  if (n < 1 || n > 12) throw BudgetError("sampled random average limited to n <= 12");
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  const std::vector<Mask> monomials = nonaffine_monomials(n);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<BooleanFunction> fs;
  fs.reserve(samples);
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<Mask> terms;
    for (Mask m : monomials)
      if (coin(rng)) terms.push_back(m);
    fs.emplace_back(n, std::move(terms));
  }
  std::vector<std::uint64_t> counts(fs.size(), 0);
  parallel_for(fs.size(), threads, [&](std::size_t i) { counts[i] = ih_count(fs[i]); });
  return make_rational(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}), samples);
}

Rational average_flat_quadratic(int n, int threads) {
  if (n < 1 || n > 8) throw BudgetError("exhaustive quadratic average limited to n <= 8");
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t graphs = std::uint64_t{1} << pairs;
  const std::uint64_t chunk = 4096;
  const std::size_t chunks = static_cast<std::size_t>((graphs + chunk - 1) / chunk);
  std::vector<std::uint64_t> sums(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t c) {
    std::uint64_t s = 0;
    const std::uint64_t end = std::min(graphs, (c + 1) * chunk);
    for (std::uint64_t code = c * chunk; code < end; ++code) {
      const Graph g = Graph::from_edge_code(n, code);
      for (Mask h = 0; h < bit(n); ++h)
        if (is_flat_quadratic(g, h, 0)) ++s;
    }
    sums[c] = s;
  });
  return make_rational(std::accumulate(sums.begin(), sums.end(), std::uint64_t{0}), graphs);
}

TableResult compute_table(int table, int max_n, const TableOptions& options) {
  if (table < 1 || table > 5) throw std::invalid_argument("table must be 1..5");
  if (max_n < 1 || max_n > Graph::kMaxVertices) throw std::invalid_argument("max n must lie in [1, 31]");
  static const char* const titles[] = {"Average number of flat spectra w.r.t. {I,H}^n",
                                       "Numbers of LC orbits of graphs on n vertices",
                                       "Numbers of pivot orbits of graphs on n vertices",
                                       "Numbers of pivot orbits and binary linear codes",
                                       "Numbers of pivot orbits of labelled graphs on n vertices"};
  TableResult result;
  result.table = table;
  result.title = titles[table - 1];
  result.columns = table_columns(table);
  const int min_n = std::max(options.min_n, table == 1 ? 2 : 1);
  auto limit = [&](const std::string& column) {
    return std::max(table_column_limit(table, column), options.override_limit);
  };
  ClassifyOptions co;
  co.threads = options.threads;
  co.keep_representatives = false;
  auto orbit_count = [&](int n, Move move, Universe universe, Mode mode) {
    ClassifyOptions o = co;
    o.max_n = std::max(n, default_classify_limit(move, universe, mode));
    return classify(n, move, universe, mode, o).count;
  };

  // Bipartite connected counts from 1..max feed the Euler transform.
  std::vector<std::uint64_t> bipartite_i;
  auto bipartite_upto = [&](int n) {
    while (static_cast<int>(bipartite_i.size()) <= n) {
      const int m = static_cast<int>(bipartite_i.size());
      if (m == 0) {
        bipartite_i.push_back(0);
        continue;
      }
      ClassifyOptions o = co;
      o.max_n = std::max(m, 9);
      bipartite_i.push_back(classify_bipartite_by_extension(m, o).count);
    }
  };

  bool any = false;
  for (int n = min_n; n <= max_n; ++n) {
    TableRow row;
    row.n = n;
    std::map<std::string, std::uint64_t> counts;
    for (const std::string& column : result.columns) {
      TableCell cell;
      cell.column = column;
      const bool fits = n <= limit(column);
      if (table == 1) {
        cell.digits = 3;
        if (column == "random") {
          if (fits && n <= 5) {
            cell.value = average_flat_random(n, options.threads);
          } else if (options.samples > 0) {
            cell.value = sample_flat_random(n, options.samples, options.seed + static_cast<std::uint64_t>(n),
                                            options.threads);
            cell.sampled = true;
          } else {
            row.skipped.push_back(column);
            continue;
          }
        } else {
          if (!fits || n > 8) {
            row.skipped.push_back(column);
            continue;
          }
          cell.value = average_flat_quadratic(n, options.threads);
        }
      } else {
        if (!fits) {
          row.skipped.push_back(column);
          continue;
        }
        std::uint64_t v = 0;
        if (column == "i_LC") v = orbit_count(n, Move::kLc, Universe::kConnected, Mode::kUnlabelled);
        else if (column == "t_LC") v = orbit_count(n, Move::kLc, Universe::kAll, Mode::kUnlabelled);
        else if (column == "i_P") v = orbit_count(n, Move::kPivot, Universe::kConnected, Mode::kUnlabelled);
        else if (column == "t_P") v = orbit_count(n, Move::kPivot, Universe::kAll, Mode::kUnlabelled);
        else if (column == "i_PB") {
          bipartite_upto(n);
          v = bipartite_i[static_cast<std::size_t>(n)];
        } else if (column == "t_PB") {
          bipartite_upto(n);
          v = euler_transform(bipartite_i)[static_cast<std::size_t>(n)];
        } else if (column == "i_C" || column == "i_C_iso") {
          const CodeClassification c = classify_codes(n, options.threads);
          v = column == "i_C" ? c.indecomposable : c.isodual;
        } else if (column == "i_PL") v = orbit_count(n, Move::kPivot, Universe::kConnected, Mode::kLabelled);
        else if (column == "t_PL") v = orbit_count(n, Move::kPivot, Universe::kAll, Mode::kLabelled);
        else if (column == "i_PBL") v = orbit_count(n, Move::kPivot, Universe::kBipartiteConnected, Mode::kLabelled);
        else if (column == "t_PBL") v = orbit_count(n, Move::kPivot, Universe::kBipartiteAll, Mode::kLabelled);
        cell.value = count_value(v);
        counts[column] = v;
      }
      if (!cell.sampled) {
        cell.golden = table_golden(table, column, n);
        if (cell.golden) {
          cell.matches = golden_matches(*cell.golden, cell);
          if (!cell.matches)
            result.mismatches.push_back("table " + std::to_string(table) + " " + column + " n=" + std::to_string(n) +
                                        ": computed " + cell.display() + ", expected " + *cell.golden);
        }
      }
      any = true;
      row.cells.push_back(std::move(cell));
    }

    auto check = [&](bool ok, const std::string& what) {
      if (!ok) result.inconsistencies.push_back("n=" + std::to_string(n) + ": " + what);
    };
    auto both = [&](const char* a, const char* b) { return counts.count(a) && counts.count(b); };
    if (both("i_LC", "t_LC")) check(counts["i_LC"] <= counts["t_LC"], "i_LC > t_LC");
    if (both("i_P", "t_P")) check(counts["i_P"] <= counts["t_P"], "i_P > t_P");
    if (both("i_PB", "t_PB")) check(counts["i_PB"] <= counts["t_PB"], "i_PB > t_PB");
    if (both("i_PL", "t_PL")) check(counts["i_PL"] <= counts["t_PL"], "i_PL > t_PL");
    if (both("i_PBL", "t_PBL")) check(counts["i_PBL"] <= counts["t_PBL"], "i_PBL > t_PBL");
    if (both("i_PBL", "i_PL")) check(counts["i_PBL"] <= counts["i_PL"], "i_PBL > i_PL");
    if (both("i_PB", "i_P")) check(counts["i_PB"] <= counts["i_P"], "i_PB > i_P");
    if (both("i_C", "i_C_iso")) {
      check(counts["i_C_iso"] <= counts["i_C"], "isodual codes exceed codes");
      if (n % 2 == 1) check(counts["i_C_iso"] == 0, "isodual code of odd length");
    }
    if (counts.count("i_C") && counts.count("i_PB") && counts.count("i_C_iso") && n >= 2)
      check(counts["i_C"] == 2 * counts["i_PB"] - counts["i_C_iso"], "code count differs from 2 i_PB - isodual");
    for (const TableCell& c : row.cells)
      if (table == 1 && !c.sampled) {
        // The identity spec is always flat; the clique maximises the count.
        check(c.value.num <= c.value.den * (std::uint64_t{1} << (n - 1)), c.column + " above 2^(n-1)");
        check(c.value.num >= c.value.den, c.column + " below 1");
      }
    result.rows.push_back(std::move(row));
  }
  if (!any) throw BudgetError("every requested cell is above its size ceiling; raise the limit to compute it");
  return result;
}

}  // namespace pivotlab

#pragma once

// Property sweeps shared by the `verify` command and the acceptance runner.
// Each sweep counts checks and failures per part and keeps the first few
// failing inputs.

#include <cstdint>
#include <string>
#include <vector>

namespace pivotlab {

struct SuitePart {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> examples;

  void record(bool ok, const std::string& input);
};

struct SuiteReport {
  std::string suite;
  std::vector<SuitePart> parts;

  SuitePart& part(const std::string& name);
  std::uint64_t checks() const;
  std::uint64_t failures() const;
  bool passed() const { return checks() > 0 && failures() == 0; }
};

struct IdentitySuiteOptions {
  // Exhaustive sweep over every function without affine terms for
  // n in [1, exhaustive_max_n] (0 skips it).
  int exhaustive_max_n = 4;
  std::uint64_t random_samples = 10000;
  int random_min_n = 2;
  int random_max_n = 6;
  std::uint64_t seed = 1;
};

// NAPF, the three H-identity branches, the LC chain and the pivot identity.
SuiteReport transform_identity_suite(const IdentitySuiteOptions& options);

// Pivot identity on every admissible edge of random hypergraphs (degree
// 2..4, affine terms allowed, at least one admissible edge) and of every
// labelled connected graph on up to graph_max_n vertices.
SuiteReport pivot_spectra_suite(std::uint64_t hypergraphs, int max_n, int graph_max_n, std::uint64_t seed);

// For each connected graph up to isomorphism: the H-sets giving flat
// spectra equal {} plus the sets reachable by pivot sequences (symmetric
// differences of the edge endpoints).
SuiteReport quadratic_pivot_suite(int max_n);

// For random cubics: H_i H_j flat iff x_i x_j is an admissible edge.
SuiteReport only_pivot_suite(std::uint64_t samples, int max_n, std::uint64_t seed);

// count_flat_quadratic against count_flat for every labelled graph, all
// three families.
SuiteReport rank_criterion_suite(int max_n, int threads = 0);

// Family bounds: IH lower bound for every h (exhaustive for t <= 4 up to
// affine terms, sampled above), equality at h = x_0...x_{t-1}, and the IHN
// lower bound (exhaustive for t <= ihn_exhaustive_t, sampled above).
SuiteReport family_suite(int max_n, std::uint64_t samples, int ihn_exhaustive_t, std::uint64_t seed);

// Clique count 2^{n-1} by direct transforms and by the rank criterion.
SuiteReport clique_suite(int direct_max_n, int rank_max_n);

// Orbit information-set count against rank brute force for every
// indecomposable code class up to max_n.
SuiteReport infoset_suite(int max_n, int threads = 0);

}  // namespace pivotlab

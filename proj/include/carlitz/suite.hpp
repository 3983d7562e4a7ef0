#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "carlitz/json_io.hpp"
#include "carlitz/periods.hpp"
#include "carlitz/torsion.hpp"

namespace carlitz {

struct SuiteConfig {
  i64 q = 2;
  i64 d = 1;
  std::vector<i64> n_list{1, 2, 3, 4};
  std::vector<i64> k_list{0, 1, 2};
  i64 N = 96;
  std::optional<i64> M;
  std::optional<i64> J;
  std::uint64_t seed = 1;
  std::string out;  // report path, empty = stdout only
  std::string csv;  // optional CSV table of residual valuations
};

SuiteConfig suite_config_from_json(const Json& j);
Json suite_config_to_json(const SuiteConfig& cfg);

// q = p^e; throws ConfigError when q is not a prime power.
std::pair<i64, i64> factor_prime_power(i64 q);

struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "starved"
  std::optional<i64> residual_valuation;
  i64 precision = 0;  // certified u-digits of the comparison
  i64 required = 0;   // u-digits the check must certify
  std::string detail;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckResult> checks;
  int exit_code = 0;  // 0 all pass, 1 mathematical fail, 2 precision exhausted
};

// Special-function bundles keyed by truncation parameters, built once and
// shared read-only across checks.
class BundleCache {
 public:
  explicit BundleCache(const Field& F) : F_(&F) {}
  const SpecialBundle& get(i64 M, i64 N);
  const SpecialBundle& get_with_cutoff(i64 M, i64 N, i64 J);

 private:
  const Field* F_;
  std::map<std::tuple<i64, i64, i64>, std::unique_ptr<SpecialBundle>> cache_;
};

// Seeded generators for the property checks. Coefficients are exact Laurent
// monomials/binomials in u so polynomial identities can be asserted exactly.
LaurentU random_exact_laurent(const Field& F, std::mt19937_64& rng, i64 max_exp, i64 max_terms);
TSeries random_polynomial(const Field& F, std::mt19937_64& rng, i64 max_deg, i64 max_exp,
                          bool unit_constant);
TSeries random_series(const Field& F, std::mt19937_64& rng, i64 tprec, i64 max_exp, i64 uprec);
BlockMat random_poly_matrix(const Field& F, std::mt19937_64& rng, i64 n, i64 max_deg, i64 max_exp);

// Individual verifiers. Each sizes its internal working precision so that a
// healthy run certifies at least N u-digits where N is meaningful.
CheckResult check_diffeq_sigma(BundleCache& C, const Field& F, i64 N);
CheckResult check_diffeq_tau(BundleCache& C, const Field& F, i64 N);
std::vector<CheckResult> check_rho_homomorphism(const Field& F, std::uint64_t seed, i64 pairs,
                                                i64 kmax);
CheckResult check_hyperderivative_laws(const Field& F, std::uint64_t seed);
CheckResult check_trivialization(BundleCache& C, const Field& F, i64 n, i64 k, i64 N,
                                 TrivFlavor flavor);
CheckResult check_block_structure(const Field& F, std::uint64_t seed, i64 k);
CheckResult check_tmodule_prolongation(const Field& F, i64 k);
CheckResult check_purity(const Field& F, std::uint64_t seed);
CheckResult check_periods_routes(BundleCache& C, const Field& F, i64 n, i64 N);
CheckResult check_periods_normalization(BundleCache& C, const Field& F, i64 n, i64 N);
CheckResult check_toeplitz(BundleCache& C, const Field& F, i64 n, i64 N);
CheckResult check_vanishing(BundleCache& C, const Field& F, i64 n, i64 N);
CheckResult check_power_lemma(BundleCache& C, const Field& F, std::uint64_t seed, i64 n, i64 k,
                              i64 N);
std::vector<CheckResult> check_torsion(BundleCache& C, const Field& F, i64 nmax, i64 N);
CheckResult check_stability(const Field& F, i64 M, i64 N);

// Internal working-precision schedules shared with the acceptance suite.
i64 periods_uprec(i64 q, i64 n, i64 N);
i64 periods_tprec(i64 q, i64 n, i64 uprec);
i64 torsion_uprec(const Field& F, i64 N);
i64 torsion_tprec(const Field& F, i64 N);

SuiteReport run_suite(const SuiteConfig& cfg);
Json suite_report_to_json(const SuiteReport& rep);
std::string suite_report_to_csv(const SuiteReport& rep);

// Deterministic fixture set (Carlitz tensor powers and their prolongations)
// for golden-file regression; keys are file stems.
std::map<std::string, Json> standard_fixtures(const SuiteConfig& cfg);

}  // namespace carlitz

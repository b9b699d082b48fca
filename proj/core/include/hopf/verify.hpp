#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hopf {

/// Outcome of one verification suite: a named batch of exact checks plus a
/// machine-readable certificate (counts, witnesses, or the first
/// counterexample found).  `detail` is empty iff the suite passed.
struct SuiteResult {
  std::string name;
  bool passed = false;
  long checks = 0;
  std::string detail;
  nlohmann::json certificate;
};

/// Random smooth curves stay within total weight 2n-2 and the two-line
/// full-contact constructor attains the bound exactly.
SuiteResult suite_weight_bound(int n, int samples, long bound, std::uint64_t seed);

/// deg J = 2n-2 and the exponent-weighted root counts of both J and the
/// pencil discriminant equal 2n-2 on every sampled smooth curve.
SuiteResult suite_ramification_count(int n, int samples, long bound, std::uint64_t seed);

/// The vanishing order of the pencil discriminant at each theta equals the
/// weight of the fiber profile there -- two independent algorithms agreeing.
SuiteResult suite_discriminant_order(int n, int samples, long bound, std::uint64_t seed);

/// Spectral cover smooth <=> classification regular, on random curves and on
/// constructed single-line tangency witnesses; p_a = 2n-1 throughout.
SuiteResult suite_spectral_dichotomy(int n, int samples, long bound, std::uint64_t seed);

/// Geometric genus from the delta ledger agrees with the branch-parity
/// oracle B_odd/2 - 1, on random curves and on constructed extreme profiles.
SuiteResult suite_genus_cross_check(int n, int samples, long bound, std::uint64_t seed);

/// Single-line schemes of degree <= n impose independent conditions:
/// h0 = 2n+2 - deg Z, an extra simple point raises the rank by exactly one,
/// and the two-line full-contact scheme has h0 = 2.
SuiteResult suite_interpolation(int n, int samples, std::uint64_t seed);

/// Every ordered tangency pair (and triple, when n >= 4) and every
/// restricted profile with sum <= n is realized by a constructor with the
/// advertised weights and codimension certificate, with zero failures.
SuiteResult suite_strata(int n, std::uint64_t seed);

/// Fraction of smooth random curves with squarefree J and squarefree
/// discriminant is exactly 1.0; any counterexample is logged with its curve.
SuiteResult suite_genericity(int n, int samples, long bound, std::uint64_t seed);

/// n = 2 only: the realized weight 4-tuples are exactly {(0,0,0,0)} plus the
/// 0/1-tuples with 1 <= sum <= 2, and no sample or constructor ever reaches
/// an individual weight of 2.
SuiteResult suite_weight_tuples(int samples, std::uint64_t seed);

/// Betti convolution oracle values, support bound, and input validation.
SuiteResult suite_betti_utility();

/// Identical seeds reproduce byte-identical survey CSV and constructor
/// certificates.
SuiteResult suite_determinism(int n, std::uint64_t seed);

struct VerifyReport {
  bool all_passed = false;
  std::vector<SuiteResult> suites;
};

/// Runs every suite for each n in [n_min, n_max] (plus the global ones) and
/// aggregates.  Requires 2 <= n_min <= n_max.
VerifyReport run_verify(int n_min, int n_max, std::uint64_t seed);

nlohmann::json suite_json(const SuiteResult& s);
nlohmann::json verify_json(const VerifyReport& r);

}  // namespace hopf

#pragma once

#include "hopf/graph.hpp"
#include "hopf/rng.hpp"

#include <cstdint>
#include <string>

namespace hopf {

/// Counts from a randomized sweep over curves with integer coefficients in
/// [-bound, bound].  All rate counters are taken among the smooth samples;
/// rh_identity_ok must equal smooth on every run (the identity is exact).
struct SurveyStats {
  int n = 0;
  int samples = 0;
  long coefficient_bound = 0;
  std::uint64_t seed = 0;
  int smooth = 0;
  int regular = 0;
  int irregular = 0;
  int ordinary_ramification = 0;    // Jacobian form squarefree
  int distinct_branch_images = 0;   // pencil discriminant squarefree
  int rh_identity_ok = 0;
};

/// One random curve, coefficients uniform in [-bound, bound], never the
/// (0,0) pair.  Not necessarily smooth.
GraphCurve random_curve(int n, long bound, SplitMix64& rng);

/// Deterministic for fixed arguments: sample i draws from its own stream
/// seeded by derive_seed(seed, i), so the aggregate is independent of
/// evaluation order.
SurveyStats run_survey(int n, int samples, long bound, std::uint64_t seed,
                       const ThetaConfig& t = standard_thetas());

/// Fixed column set: n,samples,bound,seed,smooth,regular,irregular,
/// ordinary_ram,distinct_images,rh_ok.  Byte-stable for fixed stats.
std::string survey_csv(const SurveyStats& s);

}  // namespace hopf

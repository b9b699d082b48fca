#include "hopf/survey.hpp"

#include <sstream>
#include <stdexcept>

namespace hopf {

GraphCurve random_curve(int n, long bound, SplitMix64& rng) {
  while (true) {
    std::vector<Rational> p(static_cast<std::size_t>(n) + 1), q(static_cast<std::size_t>(n) + 1);
    bool any = false;
    for (auto& c : p) {
      c = Rational(rng.uniform(-bound, bound));
      any = any || !c.is_zero();
    }
    for (auto& c : q) {
      c = Rational(rng.uniform(-bound, bound));
      any = any || !c.is_zero();
    }
    if (!any) continue;
    return GraphCurve(n, BinaryForm(n, std::move(p)), BinaryForm(n, std::move(q)));
  }
}

SurveyStats run_survey(int n, int samples, long bound, std::uint64_t seed,
                       const ThetaConfig& t) {
  if (n < 2) throw std::invalid_argument("survey needs n >= 2");
  if (samples < 1) throw std::invalid_argument("survey needs at least one sample");
  if (bound < 1) throw std::invalid_argument("coefficient bound must be positive");

  SurveyStats s;
  s.n = n;
  s.samples = samples;
  s.coefficient_bound = bound;
  s.seed = seed;
  for (int i = 0; i < samples; ++i) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const GraphCurve d = random_curve(n, bound, rng);
    if (!d.smooth()) continue;
    ++s.smooth;
    const RamificationReport r = ramification_report(d, t);
    (r.total_weight > 0 ? s.irregular : s.regular) += 1;
    if (r.jacobian_squarefree) ++s.ordinary_ramification;
    if (r.discriminant_squarefree) ++s.distinct_branch_images;
    if (r.rh_identity) ++s.rh_identity_ok;
  }
  return s;
}

std::string survey_csv(const SurveyStats& s) {
  std::ostringstream os;
  os << "n,samples,bound,seed,smooth,regular,irregular,ordinary_ram,distinct_images,rh_ok\n"
     << s.n << ',' << s.samples << ',' << s.coefficient_bound << ',' << s.seed << ','
     << s.smooth << ',' << s.regular << ',' << s.irregular << ','
     << s.ordinary_ramification << ',' << s.distinct_branch_images << ','
     << s.rh_identity_ok << '\n';
  return os.str();
}

}  // namespace hopf

#include "hopf/spectral.hpp"

#include <stdexcept>
#include <utility>

namespace hopf {

namespace {

Profile profile_of(const SquarefreeDecomposition& dec) {
  std::vector<int> mults;
  for (const auto& part : dec.parts)
    for (int i = 0; i < part.factor.degree(); ++i) mults.push_back(part.exponent);
  return Profile(std::move(mults));
}

}  // namespace

SpectralData spectral_invariants(const GraphCurve& d, const ThetaConfig& t) {
  if (!d.smooth()) throw std::domain_error("graph has vertical component");

  std::vector<Profile> profiles;
  profiles.reserve(4);
  std::vector<SingularPoint> singular;
  int total_delta = 0;

  for (int i = 0; i < 4; ++i) {
    const SquarefreeDecomposition dec =
        squarefree_decomposition(fiber_form(d, t.theta(i)));
    profiles.push_back(profile_of(dec));
    for (const auto& part : dec.parts) {
      if (part.exponent < 2) continue;
      auto [points, leftover] = split_rational_roots(part.factor);
      for (const auto& [point, mult] : points) {
        (void)mult;  // factor is squarefree: every root is simple
        singular.push_back({i, point, BinaryForm::linear_through(point).monic(),
                            part.exponent, 1});
        total_delta += part.exponent / 2;
      }
      if (leftover.degree() >= 1) {
        const int count = leftover.degree();
        singular.push_back({i, std::nullopt, leftover.monic(), part.exponent, count});
        total_delta += (part.exponent / 2) * count;
      }
    }
  }

  const int pa = 2 * d.n() - 1;
  SpectralData out{
      d.n(),
      {std::move(profiles[0]), std::move(profiles[1]), std::move(profiles[2]),
       std::move(profiles[3])},
      0,
      std::move(singular),
      pa,
      pa - total_delta,
      false,
      true,  // irreducibility is a theorem about these covers, not a computation
  };
  for (const Profile& p : out.branch_profiles) out.branch_degree += p.sum();
  out.smooth = out.singular_points.empty();
  return out;
}

bool genus_parity_check(const SpectralData& s) {
  int odd_branch_points = 0;
  for (const Profile& p : s.branch_profiles)
    for (const int m : p.multiplicities())
      if (m % 2 == 1) ++odd_branch_points;
  if (odd_branch_points % 2 != 0) throw std::domain_error("parity violation");
  return s.geometric_genus == odd_branch_points / 2 - 1;
}

}  // namespace hopf

#include "hopf/analyze.hpp"

#include "hopf/json_io.hpp"
#include "hopf/spectral.hpp"

namespace hopf {

using nlohmann::json;

static json non_smooth_report(const GraphCurve& d) {
  json out;
  out["smooth"] = false;
  out["n"] = d.n();
  out["curve"] = curve_json(d);
  out["resultant"] = d.resultant().str();

  BinaryForm common = bf_gcd(d.P(), d.Q());
  out["common_factor"] = form_json(common);

  auto [roots, leftover] = split_rational_roots(common);
  json jumps = json::array();
  std::string verdict = "has jumps:";
  bool first = true;
  for (const auto& [pt, mult] : roots) {
    jumps.push_back(point_json(pt));
    verdict += first ? " " : ", ";
    verdict += "vertical component at " + pt.str();
    first = false;
  }
  if (leftover.degree() >= 1) {
    verdict += first ? " " : ", ";
    verdict += "vertical components over an irrational locus of degree " +
               std::to_string(leftover.degree());
  }
  out["jumps"] = jumps;
  out["verdict"] = verdict;
  return out;
}

json analyze_report(const GraphCurve& d, const ThetaConfig& thetas) {
  if (!d.smooth()) return non_smooth_report(d);

  json out;
  out["smooth"] = true;
  out["n"] = d.n();
  out["curve"] = curve_json(d);
  out["resultant"] = d.resultant().str();
  out["thetas"] = thetas_json(thetas);

  json profiles = json::array();
  for (int i = 0; i < 4; ++i)
    profiles.push_back(profile_json(profile(d, thetas.theta(i))));
  out["profiles"] = profiles;

  Classification c = classify(d, thetas);
  out["classification"] = classification_json(c);

  if (d.n() >= 2) {
    RamificationReport ram = ramification_report(d, thetas);
    json r;
    r["jacobian_degree"] = ram.jacobian_degree;
    r["jacobian_squarefree"] = ram.jacobian_squarefree;
    r["discriminant_squarefree"] = ram.discriminant_squarefree;
    r["rh_identity"] = ram.rh_identity;
    out["ramification"] = r;
  }

  SpectralData sp = spectral_invariants(d, thetas);
  out["spectral"] = spectral_json(sp);
  out["genus_parity"] = genus_parity_check(sp);
  return out;
}

} // namespace hopf

#include "hopf/json_io.hpp"

#include <cstdio>
#include <limits>
#include <stdexcept>

namespace hopf {

namespace {

using nlohmann::json;

// Canonical points are tiny, but curve data is user input: accept JSON
// integers and decimal strings alike, emit integers when they fit.
json int_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  throw std::invalid_argument("expected an integer or integer string");
}

}  // namespace

json rational_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Int(j.get<std::int64_t>()));
  throw std::invalid_argument("expected a rational string \"p/q\" or an integer");
}

json point_json(const ProjPoint& p) { return json::array({int_json(p.x0()), int_json(p.x1())}); }

ProjPoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("a point must be a pair [x0, x1]");
  return ProjPoint(int_from_json(j.at(0)), int_from_json(j.at(1)));
}

json form_json(const BinaryForm& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(rational_json(c));
  return json{{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

BinaryForm form_from_json(const json& j) {
  const int degree = j.at("degree").get<int>();
  const json& coeffs = j.at("coeffs");
  if (!coeffs.is_array())
    throw std::invalid_argument("form coeffs must be an array of rationals");
  std::vector<Rational> cs;
  cs.reserve(coeffs.size());
  for (const auto& c : coeffs) cs.push_back(rational_from_json(c));
  return BinaryForm(degree, std::move(cs));
}

json curve_json(const GraphCurve& d) {
  return json{{"n", d.n()}, {"P", form_json(d.P())}, {"Q", form_json(d.Q())}};
}

GraphCurve curve_from_json(const json& j) {
  return GraphCurve(j.at("n").get<int>(), form_from_json(j.at("P")),
                    form_from_json(j.at("Q")));
}

json thetas_json(const ThetaConfig& t) {
  json arr = json::array();
  for (const auto& p : t.thetas()) arr.push_back(point_json(p));
  return json{{"thetas", std::move(arr)}};
}

ThetaConfig thetas_from_json(const json& j) {
  const json& arr = j.at("thetas");
  if (!arr.is_array() || arr.size() != 4)
    throw std::invalid_argument("a theta configuration lists exactly 4 points");
  return ThetaConfig({point_from_json(arr.at(0)), point_from_json(arr.at(1)),
                      point_from_json(arr.at(2)), point_from_json(arr.at(3))});
}

json profile_json(const Profile& p) { return json(p.multiplicities()); }

json classification_json(const Classification& c) {
  return json{{"kind", kind_name(c.kind)},
              {"weights", c.weights},
              {"total", c.total}};
}

json scheme_json(const FatPointScheme& z) {
  json points = json::array();
  for (const auto& fp : z.points())
    points.push_back(json{{"theta", fp.theta_index + 1},  // 1-based on the wire
                          {"x", point_json(fp.x)},
                          {"m", fp.multiplicity}});
  return json{{"points", std::move(points)}};
}

FatPointScheme scheme_from_json(const json& j) {
  std::vector<FatPoint> points;
  for (const auto& p : j.at("points"))
    points.push_back({p.at("theta").get<int>() - 1, point_from_json(p.at("x")),
                      p.at("m").get<int>()});
  return FatPointScheme(std::move(points));
}

json spectral_json(const SpectralData& s) {
  json profiles = json::array();
  for (const auto& p : s.branch_profiles) profiles.push_back(profile_json(p));
  json singular = json::array();
  for (const auto& sp : s.singular_points) {
    json entry{{"theta", sp.theta_index + 1},
               {"factor", form_json(sp.factor)},
               {"mult", sp.multiplicity},
               {"type", sp.local_type()},
               {"delta", sp.delta()},
               {"count", sp.count}};
    if (sp.point) entry["point"] = point_json(*sp.point);
    singular.push_back(std::move(entry));
  }
  return json{{"n", s.n},
              {"branch_profiles", std::move(profiles)},
              {"branch_degree", s.branch_degree},
              {"singular_points", std::move(singular)},
              {"arithmetic_genus", s.arithmetic_genus},
              {"geometric_genus", s.geometric_genus},
              {"smooth", s.smooth},
              {"irreducible", s.irreducible}};
}

json certificate_json(const Certificate& c) {
  return json{{"deg_Z", c.deg_z}, {"rank", c.rank}, {"h0", c.h0}};
}

json construction_json(const ConstructionResult& r) {
  return json{{"curve", curve_json(r.curve)},
              {"classification", classification_json(r.classification)},
              {"scheme", scheme_json(r.scheme)},
              {"certificate", certificate_json(r.certificate)},
              {"free_points", r.free_points},
              {"codimension", r.codimension},
              {"seed", r.seed}};
}

json survey_json(const SurveyStats& s) {
  const auto fraction = [&s](int count) -> json {
    if (s.smooth == 0) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(count) / s.smooth);
    return std::string(buf);
  };
  return json{{"n", s.n},
              {"samples", s.samples},
              {"bound", s.coefficient_bound},
              {"seed", s.seed},
              {"counts",
               {{"smooth", s.smooth},
                {"regular", s.regular},
                {"irregular", s.irregular},
                {"ordinary_ramification", s.ordinary_ramification},
                {"distinct_branch_images", s.distinct_branch_images},
                {"rh_identity_ok", s.rh_identity_ok}}},
              {"fractions",
               {{"regular", fraction(s.regular)},
                {"ordinary_ramification", fraction(s.ordinary_ramification)},
                {"distinct_branch_images", fraction(s.distinct_branch_images)}}}};
}

}  // namespace hopf

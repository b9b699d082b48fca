#pragma once

#include "hopf/graph.hpp"
#include "hopf/linsys.hpp"
#include "hopf/spectral.hpp"
#include "hopf/survey.hpp"

#include <nlohmann/json.hpp>

namespace hopf {

// JSON boundary.  Conventions: rationals are strings "p" / "p/q"; forms are
// {"degree": d, "coeffs": ["c0", ..., "cd"]} with c_k multiplying s^k t^(d-k);
// points are [x0, x1]; theta indices are 1-based on the wire, 0-based in the
// library.  Key order in dumps is alphabetical (nlohmann's default), which
// keeps serialized certificates byte-stable.

nlohmann::json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json point_json(const ProjPoint& p);
ProjPoint point_from_json(const nlohmann::json& j);

nlohmann::json form_json(const BinaryForm& f);
BinaryForm form_from_json(const nlohmann::json& j);

nlohmann::json curve_json(const GraphCurve& d);
GraphCurve curve_from_json(const nlohmann::json& j);

nlohmann::json thetas_json(const ThetaConfig& t);
ThetaConfig thetas_from_json(const nlohmann::json& j);

nlohmann::json profile_json(const Profile& p);

nlohmann::json classification_json(const Classification& c);

nlohmann::json scheme_json(const FatPointScheme& z);
FatPointScheme scheme_from_json(const nlohmann::json& j);

nlohmann::json spectral_json(const SpectralData& s);

nlohmann::json certificate_json(const Certificate& c);

nlohmann::json construction_json(const ConstructionResult& r);

nlohmann::json survey_json(const SurveyStats& s);

}  // namespace hopf

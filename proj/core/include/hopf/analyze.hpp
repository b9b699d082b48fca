#pragma once

#include <nlohmann/json.hpp>

#include "hopf/graph.hpp"

namespace hopf {

/// Full diagnostic report for one curve: smoothness, the four fiber
/// profiles, classification, ramification bookkeeping, and the spectral
/// cover data.  Non-smooth curves get a short verdict naming the
/// vertical components instead.
nlohmann::json analyze_report(const GraphCurve& d,
                              const ThetaConfig& thetas = standard_thetas());

} // namespace hopf

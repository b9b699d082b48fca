#pragma once

// Univariate polynomials over Q, ascending coefficients, trimmed so the
// leading coefficient is nonzero (the zero polynomial is the empty vector).
// Internal helper for the binary-form layer; not installed.

#include "hopf/rational.hpp"

#include <utility>
#include <vector>

namespace hopf::detail {

using UPoly = std::vector<Rational>;

inline void up_trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int up_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline bool up_is_zero(const UPoly& p) { return p.empty(); }

inline UPoly up_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  up_trim(r);
  return r;
}

inline UPoly up_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  up_trim(r);
  return r;
}

inline UPoly up_derivative(const UPoly& p) {
  if (p.size() <= 1) return {};
  UPoly r(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) r[k - 1] = Rational(static_cast<int>(k)) * p[k];
  up_trim(r);
  return r;
}

inline UPoly up_monic(UPoly p) {
  up_trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

// Quotient and remainder; divisor must be nonzero.
inline std::pair<UPoly, UPoly> up_divmod(UPoly a, const UPoly& b) {
  up_trim(a);
  UPoly q;
  if (up_deg(a) >= up_deg(b)) q.assign(a.size() - b.size() + 1, Rational());
  while (!a.empty() && a.size() >= b.size()) {
    const Rational lead = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    up_trim(a);
  }
  up_trim(q);
  return {std::move(q), std::move(a)};
}

inline UPoly up_gcd_monic(UPoly a, UPoly b) {
  up_trim(a);
  up_trim(b);
  while (!b.empty()) {
    auto [q, r] = up_divmod(a, b);
    (void)q;
    a = std::move(b);
    b = up_monic(std::move(r));  // monic remainders keep coefficients tame
  }
  return up_monic(std::move(a));
}

}  // namespace hopf::detail

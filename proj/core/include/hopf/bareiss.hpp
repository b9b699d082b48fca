#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace hopf {

/// Fraction-free (Bareiss) determinant over any integral domain.  Every
/// division in the recurrence
///
///   m[i][j] <- (m[k][k]*m[i][j] - m[i][k]*m[k][j]) / previous_pivot
///
/// is exact by the Sylvester identity, so the ring only has to provide exact
/// division, never fractions.  Rows are swapped to find pivots; each swap
/// flips the sign.
///
/// Ring requirements: value_type, zero(), one(), is_zero(v), mul(a,b),
/// sub(a,b), div(a,b) with b dividing a exactly, neg(v).
template <class Ring>
typename Ring::value_type bareiss_determinant(
    std::vector<std::vector<typename Ring::value_type>> m, const Ring& ring) {
  const std::size_t n = m.size();
  if (n == 0) return ring.one();
  bool negate = false;
  typename Ring::value_type prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring.is_zero(m[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && ring.is_zero(m[pivot][k])) ++pivot;
      if (pivot == n) return ring.zero();
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto t = ring.sub(ring.mul(m[k][k], m[i][j]), ring.mul(m[i][k], m[k][j]));
        m[i][j] = ring.div(std::move(t), prev);
      }
      m[i][k] = ring.zero();
    }
    prev = m[k][k];
  }
  return negate ? ring.neg(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

}  // namespace hopf

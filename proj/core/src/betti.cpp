#include "hopf/betti.hpp"

#include <stdexcept>

namespace hopf {

Int binomial(int m, int k) {
  if (k < 0 || k > m) return Int(0);
  Int r(1);
  for (int i = 1; i <= k; ++i) {
    r *= m - k + i;
    r /= i;  // exact: r is C(m-k+i, i) after each step
  }
  return r;
}

BettiVector betti_regular_locus(int n, const BettiVector& betti_a) {
  if (n < 2) throw std::invalid_argument("Betti utility needs n >= 2");
  int top = -1;
  for (std::size_t i = 0; i < betti_a.size(); ++i) {
    if (betti_a[i] < 0) throw std::invalid_argument("Betti numbers must be non-negative");
    if (betti_a[i] != 0) top = static_cast<int>(i);
  }
  if (top > 2 * n + 1) throw std::invalid_argument("exceeds affine homotopy dimension");
  if (top < 0) return {};  // zero input, zero output

  const int torus_top = 4 * n - 2;
  BettiVector torus(static_cast<std::size_t>(torus_top) + 1);
  for (int k = 0; k <= torus_top; ++k)
    torus[static_cast<std::size_t>(k)] = binomial(torus_top, k);

  BettiVector out(static_cast<std::size_t>(top + torus_top) + 1);
  for (int i = 0; i <= top; ++i) {
    if (betti_a[static_cast<std::size_t>(i)] == 0) continue;
    for (int k = 0; k <= torus_top; ++k)
      out[static_cast<std::size_t>(i + k)] +=
          betti_a[static_cast<std::size_t>(i)] * torus[static_cast<std::size_t>(k)];
  }
  // top + torus_top <= (2n+1) + (4n-2) = 6n-1, strictly below 6n.
  if (static_cast<int>(out.size()) > 6 * n)
    throw std::domain_error("support bound violated");
  return out;
}

}  // namespace hopf

#pragma once

#include "hopf/rational.hpp"

#include <vector>

namespace hopf {

/// Betti numbers b_0, b_1, ... with finite support; arbitrary precision so
/// the convolution below can never overflow.
using BettiVector = std::vector<Int>;

Int binomial(int m, int k);

/// Convolution of betti_a with the torus vector C(4n-2, k): the cohomology
/// of a product with a (4n-2)-torus.  betti_a may only be supported in
/// degrees <= 2n+1 (the affine factor has homotopy dimension 2n+1); higher
/// support throws std::invalid_argument("exceeds affine homotopy dimension").
/// The result is checked to vanish in all degrees >= 6n.
BettiVector betti_regular_locus(int n, const BettiVector& betti_a);

}  // namespace hopf

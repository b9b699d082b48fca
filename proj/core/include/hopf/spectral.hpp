#pragma once

#include "hopf/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

/// One entry of the singularity ledger of the spectral double cover: a
/// branch point of multiplicity m >= 2 contributes a singularity with local
/// model y^2 = x^m, type A_{m-1}, delta invariant floor(m/2).  A factor of
/// degree > 1 stands for its full conjugacy class of `count` points; rational
/// points carry explicit coordinates.
struct SingularPoint {
  int theta_index;                 //0-based
  std::optional<ProjPoint> point;  // present iff the factor is linear
  BinaryForm factor;               // monic squarefree defining factor
  int multiplicity;                // m >= 2
  int count;                       // = factor degree: points in this entry

  int delta() const { return multiplicity / 2; }
  std::string local_type() const { return "A" + std::to_string(multiplicity - 1); }
};

/// Invariants of the double cover of the graph curve branched over its four
/// theta fibers (4n branch points counted with multiplicity).
struct SpectralData {
  int n;
  std::array<Profile, 4> branch_profiles;
  int branch_degree;  // always 4n
  std::vector<SingularPoint> singular_points;
  int arithmetic_genus;  // always 2n-1
  int geometric_genus;   // arithmetic minus the total delta
  bool smooth;           // no singular points <=> every branch profile reduced
  bool irreducible;      // true by theorem; asserted, never computed
};

/// Throws std::domain_error("graph has vertical component") when d is not
/// smooth.
SpectralData spectral_invariants(const GraphCurve& d,
                                 const ThetaConfig& t = standard_thetas());

/// Independent genus oracle: the normalized cover is a double cover of P^1
/// branched at the B_odd branch points of odd multiplicity, so its genus is
/// B_odd/2 - 1.  True iff that matches geometric_genus.  Throws
/// std::domain_error("parity violation") if B_odd is odd, which no genuine
/// branch datum can produce.
bool genus_parity_check(const SpectralData& s);

}  // namespace hopf

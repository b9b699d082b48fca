#pragma once

#include "hopf/graph.hpp"
#include "hopf/qmatrix.hpp"

#include <cstdint>
#include <vector>

namespace hopf {

struct FatPoint {
  int theta_index;  // 0-based line index
  ProjPoint x;      // base point on that line
  int multiplicity; // m >= 1
};

/// A union of fat points (m*x, D_i): the connected degree-m subscheme of the
/// line D_i at x.  The (theta, x) pairs must be pairwise distinct.
class FatPointScheme {
public:
  FatPointScheme() = default;
  explicit FatPointScheme(std::vector<FatPoint> points);

  const std::vector<FatPoint>& points() const noexcept { return points_; }
  int degree() const;  // sum of multiplicities
  std::vector<int> mentioned_thetas() const;  // sorted, unique

private:
  std::vector<FatPoint> points_;
};

/// deg(Z) linear conditions on the 2n+2 coefficients (p_0..p_n, q_0..q_n)
/// of a curve, one row per vanishing order; rank is computed once.
class ConditionMatrix {
public:
  ConditionMatrix(QMatrix m, std::size_t rank) : matrix_(std::move(m)), rank_(rank) {}
  const QMatrix& matrix() const noexcept { return matrix_; }
  std::size_t rank() const noexcept { return rank_; }

private:
  QMatrix matrix_;
  std::size_t rank_;
};

struct Certificate {
  int deg_z;
  int rank;
  int h0;
};

/// What a stratum constructor hands back: the witness curve, its
/// classification, the interpolation scheme used, the dimension certificate,
/// and the codimension count rank - (number of moving points).
struct ConstructionResult {
  GraphCurve curve;
  Classification classification;
  FatPointScheme scheme;
  Certificate certificate;
  int free_points;
  int codimension;
  std::uint64_t seed;
};

/// Vanishing conditions of order < m at each fat point, rows scaled to
/// integers.  The derivative direction is the affine chart s/t on the line,
/// or the reciprocal chart t/s at [1:0].  Multiplicities above n+1 are
/// rejected with std::invalid_argument("condition exceeds fiber degree").
ConditionMatrix condition_matrix(const FatPointScheme& z, int n,
                                 const ThetaConfig& t = standard_thetas());

/// 2n+2 - rank: the dimension of the space of bidegree (n,1) forms through Z.
int h0(const FatPointScheme& z, int n, const ThetaConfig& t = standard_thetas());

/// Exact basis of that space, each vector cleared to primitive integers and
/// reshaped into a curve.  Throws std::domain_error("empty linear system")
/// when there is nothing through Z.
std::vector<GraphCurve> kernel_basis(const FatPointScheme& z, int n,
                                     const ThetaConfig& t = standard_thetas());

/// Random integer combination of the kernel basis that is smooth, meets each
/// fat point with exactly its prescribed multiplicity (and nothing extra on
/// the mentioned fibers), and is transversal over every theta the scheme does
/// not mention.  Resamples up to max_attempts; then throws
/// std::domain_error("no general member found ...") with the last diagnosis.
GraphCurve general_member(const FatPointScheme& z, int n, std::uint64_t seed,
                          int max_attempts = 64, long coefficient_bound = 100,
                          const ThetaConfig& t = standard_thetas());

/// Ordinary tangency at one random point of each listed line: weight exactly
/// 1 on the pattern, 0 elsewhere; codimension certificate |pattern|.
/// Pattern length 2 needs n >= 2, length 3 needs n >= 4, longer is rejected:
/// std::invalid_argument("n below theorem threshold").
ConstructionResult construct_tangency_stratum(const std::vector<int>& pattern, int n,
                                              std::uint64_t seed,
                                              const ThetaConfig& t = standard_thetas());

/// Full-multiplicity contact on two lines: profiles (n) at thetas i1 and i2,
/// weight 2n-2 total, the maximum.  The pencil dimension h0 = 2 is asserted;
/// a mismatch throws std::domain_error("dimension anomaly").
ConstructionResult construct_max_weight(int i1, int i2, int n, std::uint64_t seed,
                                        const ThetaConfig& t = standard_thetas());

/// Prescribed restricted profile (m_1 >= ... >= m_l >= 2, sum <= n) on one
/// line: places l random distinct points with those multiplicities and
/// returns a member whose fiber there has exactly that reduced profile and
/// reduced fibers elsewhere.  Codimension certificate rank - l.
ConstructionResult construct_profile_stratum(int theta_index, std::vector<int> profile,
                                             int n, std::uint64_t seed,
                                             const ThetaConfig& t = standard_thetas());

}  // namespace hopf

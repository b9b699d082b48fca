#pragma once

#include "hopf/binform.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace hopf {

/// Multiset of fiber intersection multiplicities, canonically sorted
/// non-increasing.  Entries sum to the curve bidegree n; the weight
/// sum(m_j - 1) = n - (#entries) measures how far the fiber is from reduced.
class Profile {
public:
  explicit Profile(std::vector<int> multiplicities);

  const std::vector<int>& multiplicities() const noexcept { return mults_; }
  /// The entries >= 2 ("reduced" profile).
  std::vector<int> reduced() const;
  /// Count of entries >= 2.
  int length() const;
  int sum() const;
  int weight() const;  // sum - count

  /// Order-free view, for callers that must not depend on the sort.
  std::multiset<int> as_multiset() const { return {mults_.begin(), mults_.end()}; }

  bool operator==(const Profile&) const = default;

private:
  std::vector<int> mults_;
};

/// Four distinct marked points of the second P^1 factor; theta i marks the
/// line D_i over it.  Indices are 0-based throughout the library.
class ThetaConfig {
public:
  explicit ThetaConfig(std::array<ProjPoint, 4> thetas);

  const ProjPoint& theta(int i) const { return thetas_.at(static_cast<std::size_t>(i)); }
  const std::array<ProjPoint, 4>& thetas() const noexcept { return thetas_; }

private:
  std::array<ProjPoint, 4> thetas_;
};

/// The default configuration [1:0], [0:1], [1:1], [1:-1].
const ThetaConfig& standard_thetas();

enum class Kind { regular, irregular };

struct Classification {
  Kind kind;
  std::array<int, 4> weights;
  int total;
};

/// A bidegree (n,1) divisor D = {u*P(s,t) + v*Q(s,t) = 0} on P^1 x P^1,
/// with (s,t) on the first factor and (u,v) on the second.  Smooth exactly
/// when Res(P,Q) != 0; a common root gives a vertical component (a "jump").
/// The constructor computes and caches the resultant.
class GraphCurve {
public:
  GraphCurve(int n, BinaryForm p, BinaryForm q);

  int n() const noexcept { return n_; }
  const BinaryForm& P() const noexcept { return p_; }
  const BinaryForm& Q() const noexcept { return q_; }
  const Rational& resultant() const noexcept { return resultant_; }
  bool smooth() const noexcept { return smooth_; }

private:
  int n_;
  BinaryForm p_, q_;
  Rational resultant_;
  bool smooth_;
};

struct RamificationReport {
  int jacobian_degree;           // 2n-2
  bool jacobian_squarefree;      // all ramification points simple
  bool discriminant_squarefree;  // their images pairwise distinct
  std::array<int, 4> theta_weights;
  int total_weight;
  bool rh_identity;  // exponent-weighted root count of J equals 2n-2
};

bool is_smooth(const GraphCurve& d);

/// The degree-n form a0*P + a1*Q cutting out D over a.  Throws
/// std::domain_error("vertical component at fiber") if it is identically
/// zero, which only happens for non-smooth curves.
BinaryForm fiber_form(const GraphCurve& d, const ProjPoint& a);

Profile profile(const GraphCurve& d, const ProjPoint& a);

Classification classify(const GraphCurve& d, const ThetaConfig& t = standard_thetas());

/// Jacobian form J = P_s Q_t - P_t Q_s of degree 2n-2.  A root of
/// multiplicity mu is a point where the degree-n map D -> P^1 ramifies with
/// index mu + 1.  Requires n >= 1.
BinaryForm ramification_divisor(const GraphCurve& d);

/// Discriminant of the pencil a0*P + a1*Q as a binary form in (a0, a1):
/// coeff(k) multiplies a0^k a1^(2n-2-k).  Computed as the resultant of the
/// two partial derivatives of the symbolic fiber form, by fraction-free
/// elimination over Q[a0,a1]; degree 2n-2 exactly, and the vanishing order
/// at a point a equals the weight of the fiber over a.  Requires n >= 2.
/// Throws std::domain_error("inseparable pencil") if identically zero.
BinaryForm pencil_discriminant(const GraphCurve& d);

RamificationReport ramification_report(const GraphCurve& d,
                                       const ThetaConfig& t = standard_thetas());

std::string kind_name(Kind k);  // "regular" / "irregular"

}  // namespace hopf

#pragma once

#include "hopf/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopf {

/// A point [x0 : x1] of P^1(Q), stored as the canonical primitive integer
/// pair: gcd(|x0|, |x1|) = 1 and the first nonzero coordinate positive.
/// Equality of points is then plain data equality.
class ProjPoint {
public:
  ProjPoint(Int x0, Int x1);

  /// Clears denominators of a rational coordinate pair and canonicalizes.
  static ProjPoint from_rationals(const Rational& x0, const Rational& x1);

  const Int& x0() const noexcept { return x0_; }
  const Int& x1() const noexcept { return x1_; }

  /// [1:0], the point at infinity of the affine chart s/t.
  bool is_infinity() const noexcept { return x1_ == 0; }

  bool operator==(const ProjPoint&) const = default;

  std::string str() const;  // "[x0:x1]"

private:
  Int x0_, x1_;
};

/// Homogeneous form of declared degree d in (s,t):
///
///   f = sum_{k=0..d} c_k s^k t^(d-k).
///
/// The declared degree is part of the value; leading coefficients may vanish,
/// in which case the root [1:0] has positive multiplicity (the form is
/// divisible by t).  The zero form of any declared degree is representable.
class BinaryForm {
public:
  BinaryForm() : coeffs_(1) {}
  explicit BinaryForm(int degree);  // zero form of that declared degree
  BinaryForm(int degree, std::vector<Rational> coeffs);

  static BinaryForm constant(Rational c);
  /// The linear form x1*s - x0*t vanishing exactly at p.
  static BinaryForm linear_through(const ProjPoint& p);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;

  /// Index of the highest nonzero coefficient, -1 for the zero form.
  /// degree() - top_index() is the multiplicity of the root [1:0].
  int top_index() const noexcept;
  /// Index of the lowest nonzero coefficient: the multiplicity of [0:1].
  int low_index() const noexcept;

  /// Leading nonzero coefficient divided out; zero form unchanged.
  BinaryForm monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient;
  /// the result spans the same line as *this.
  BinaryForm primitive() const;

  BinaryForm derivative_s() const;
  BinaryForm derivative_t() const;

  BinaryForm operator-() const;
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Rational& c, const BinaryForm& f);

  bool operator==(const BinaryForm&) const = default;

  /// Human-readable rendering in the variables (s, t), e.g. "s^2 - 2*s*t".
  std::string str(const char* s = "s", const char* t = "t") const;

private:
  std::vector<Rational> coeffs_;  // size = degree + 1
};

struct SquarefreePart {
  int exponent;      // k >= 1
  BinaryForm factor; // monic, squarefree, positive degree
};

/// unit * prod factor_k^k reproduces the decomposed form exactly.
/// Parts are pairwise coprime with strictly increasing exponents.
struct SquarefreeDecomposition {
  Rational unit;
  std::vector<SquarefreePart> parts;

  /// Multiply the parts back together; for testing the reconstruction law.
  BinaryForm reassemble() const;
  /// Sum over parts of exponent * degree(factor): the total root count.
  int weighted_degree() const;
};

Rational bf_eval(const BinaryForm& f, const ProjPoint& p);

/// Monic gcd, including any common s-power or t-power factor.
/// Throws std::invalid_argument("undefined gcd") when both inputs are zero.
BinaryForm bf_gcd(const BinaryForm& f, const BinaryForm& g);

/// Determinant of the (m+n) x (m+n) Sylvester matrix built from the declared
/// degrees; zero iff f and g share a projective root, [1:0] included.
/// Requires declared degrees >= 1.
Rational bf_resultant(const BinaryForm& f, const BinaryForm& g);

/// Yun decomposition over Q.  Roots at [1:0] and [0:1] are split off as
/// s/t-power factors before dehomogenizing and re-inserted as linear parts.
/// Throws std::invalid_argument on the zero form.
SquarefreeDecomposition squarefree_decomposition(const BinaryForm& f);

/// Largest k with (x1*s - x0*t)^k dividing f; 0 when f(p) != 0.
/// Requires f nonzero.
int root_multiplicity_at(const BinaryForm& f, const ProjPoint& p);

/// Exact quotient f / g; throws std::domain_error if g is zero or does not
/// divide f.
BinaryForm bf_exact_div(const BinaryForm& f, const BinaryForm& g);

/// Splits off every rational linear factor: returns (roots with
/// multiplicities, rootless cofactor).  Root search past degree 2 uses the
/// rational-root test with trial-division factoring capped at 10^6, so a
/// rational root with astronomically large height may stay in the cofactor;
/// multiplicity bookkeeping is exact regardless.
std::pair<std::vector<std::pair<ProjPoint, int>>, BinaryForm>
split_rational_roots(const BinaryForm& f);

}  // namespace hopf

#include "hopf/graph.hpp"

#include "hopf/bareiss.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hopf {

// ------------------------------------------------------------------ Profile

Profile::Profile(std::vector<int> multiplicities) : mults_(std::move(multiplicities)) {
  for (const int m : mults_)
    if (m < 1) throw std::invalid_argument("profile entries must be positive");
  std::sort(mults_.begin(), mults_.end(), std::greater<int>());
}

std::vector<int> Profile::reduced() const {
  std::vector<int> out;
  for (const int m : mults_)
    if (m >= 2) out.push_back(m);
  return out;
}

int Profile::length() const {
  return static_cast<int>(std::count_if(mults_.begin(), mults_.end(),
                                        [](int m) { return m >= 2; }));
}

int Profile::sum() const { return std::accumulate(mults_.begin(), mults_.end(), 0); }

int Profile::weight() const { return sum() - static_cast<int>(mults_.size()); }

// -------------------------------------------------------------- ThetaConfig

ThetaConfig::ThetaConfig(std::array<ProjPoint, 4> thetas) : thetas_(std::move(thetas)) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (thetas_[i] == thetas_[j])
        throw std::invalid_argument("thetas must be pairwise distinct");
}

const ThetaConfig& standard_thetas() {
  static const ThetaConfig config(std::array<ProjPoint, 4>{
      ProjPoint(1, 0), ProjPoint(0, 1), ProjPoint(1, 1), ProjPoint(1, -1)});
  return config;
}

std::string kind_name(Kind k) { return k == Kind::regular ? "regular" : "irregular"; }

// --------------------------------------------------------------- GraphCurve

GraphCurve::GraphCurve(int n, BinaryForm p, BinaryForm q)
    : n_(n), p_(std::move(p)), q_(std::move(q)) {
  if (n_ < 1) throw std::invalid_argument("curve bidegree n must be positive");
  if (p_.degree() != n_ || q_.degree() != n_)
    throw std::invalid_argument("defining forms must have degree n");
  if (p_.is_zero() && q_.is_zero())
    throw std::invalid_argument("defining forms cannot both vanish");
  resultant_ = bf_resultant(p_, q_);
  smooth_ = !resultant_.is_zero();
}

bool is_smooth(const GraphCurve& d) { return d.smooth(); }

BinaryForm fiber_form(const GraphCurve& d, const ProjPoint& a) {
  BinaryForm f = Rational(a.x0()) * d.P() + Rational(a.x1()) * d.Q();
  if (f.is_zero()) throw std::domain_error("vertical component at fiber " + a.str());
  return f;
}

Profile profile(const GraphCurve& d, const ProjPoint& a) {
  const SquarefreeDecomposition dec = squarefree_decomposition(fiber_form(d, a));
  std::vector<int> mults;
  for (const auto& part : dec.parts)
    for (int i = 0; i < part.factor.degree(); ++i) mults.push_back(part.exponent);
  return Profile(std::move(mults));
}

Classification classify(const GraphCurve& d, const ThetaConfig& t) {
  Classification c{Kind::regular, {}, 0};
  for (int i = 0; i < 4; ++i) {
    c.weights[static_cast<std::size_t>(i)] = profile(d, t.theta(i)).weight();
    c.total += c.weights[static_cast<std::size_t>(i)];
  }
  c.kind = c.total > 0 ? Kind::irregular : Kind::regular;
  return c;
}

BinaryForm ramification_divisor(const GraphCurve& d) {
  return d.P().derivative_s() * d.Q().derivative_t() -
         d.P().derivative_t() * d.Q().derivative_s();
}

// ------------------------------------------------- symbolic discriminant

namespace {

// Ring of forms in (a0, a1) for fraction-free elimination.  Zero is kept
// canonical (declared degree 0) so degree bookkeeping never sees a zero with
// stale degree; all nonzero intermediates are homogeneous, so subtraction
// only ever pairs equal degrees.
struct FormRing {
  using value_type = BinaryForm;
  BinaryForm zero() const { return BinaryForm(0); }
  BinaryForm one() const { return BinaryForm::constant(Rational(1)); }
  bool is_zero(const BinaryForm& f) const { return f.is_zero(); }
  BinaryForm mul(const BinaryForm& a, const BinaryForm& b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return a * b;
  }
  BinaryForm sub(const BinaryForm& a, const BinaryForm& b) const {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    BinaryForm r = a - b;
    return r.is_zero() ? zero() : r;
  }
  BinaryForm div(BinaryForm a, const BinaryForm& b) const {
    if (a.is_zero()) return zero();
    return bf_exact_div(a, b);
  }
  BinaryForm neg(const BinaryForm& a) const { return a.is_zero() ? a : -a; }
};

// a0*x + a1*y as a form in (a0, a1): coeff(1) = x, coeff(0) = y.
BinaryForm linear_in_a(const Rational& x, const Rational& y) {
  if (x.is_zero() && y.is_zero()) return BinaryForm(0);
  return BinaryForm(1, {y, x});
}

}  // namespace

BinaryForm pencil_discriminant(const GraphCurve& d) {
  const int n = d.n();
  if (n < 2) throw std::invalid_argument("pencil discriminant needs n >= 2");

  // Coefficient lists (in s) of the two partials of F = a0*P + a1*Q, each
  // entry a linear form in (a0, a1).  Both partials have degree n-1.
  std::vector<BinaryForm> ds(static_cast<std::size_t>(n)), dt(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Rational js(j + 1), jt(n - j);
    ds[static_cast<std::size_t>(j)] =
        linear_in_a(js * d.P().coeff(j + 1), js * d.Q().coeff(j + 1));
    dt[static_cast<std::size_t>(j)] =
        linear_in_a(jt * d.P().coeff(j), jt * d.Q().coeff(j));
  }

  const std::size_t size = static_cast<std::size_t>(2 * n - 2);
  const FormRing ring;
  std::vector<std::vector<BinaryForm>> syl(size, std::vector<BinaryForm>(size, ring.zero()));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j < n; ++j) {
      syl[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
          ds[static_cast<std::size_t>(n - 1 - j)];
      syl[static_cast<std::size_t>(n - 1 + i)][static_cast<std::size_t>(i + j)] =
          dt[static_cast<std::size_t>(n - 1 - j)];
    }

  BinaryForm delta = bareiss_determinant(std::move(syl), ring);
  if (delta.is_zero()) throw std::domain_error("inseparable pencil");
  return delta;
}

RamificationReport ramification_report(const GraphCurve& d, const ThetaConfig& t) {
  const int expected = 2 * d.n() - 2;
  RamificationReport r{};
  r.jacobian_degree = expected;

  const BinaryForm j = ramification_divisor(d);
  const SquarefreeDecomposition ramification = squarefree_decomposition(j);
  r.jacobian_squarefree = std::all_of(
      ramification.parts.begin(), ramification.parts.end(),
      [](const SquarefreePart& part) { return part.exponent == 1; });
  r.rh_identity = ramification.weighted_degree() == expected;

  const SquarefreeDecomposition images = squarefree_decomposition(pencil_discriminant(d));
  r.discriminant_squarefree = std::all_of(
      images.parts.begin(), images.parts.end(),
      [](const SquarefreePart& part) { return part.exponent == 1; });

  const Classification c = classify(d, t);
  r.theta_weights = c.weights;
  r.total_weight = c.total;
  return r;
}

}  // namespace hopf

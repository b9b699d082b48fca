#include "hopf/binform.hpp"

#include "hopf/bareiss.hpp"
#include "upoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hopf {

namespace {

using detail::UPoly;

Int int_pow(const Int& base, int exp) {
  Int r(1);
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Int lcm_of_denominators(const std::vector<Rational>& cs) {
  Int l(1);
  for (const auto& c : cs) l = boost::multiprecision::lcm(l, c.den());
  return l;
}

// Coefficients scaled by the common denominator, as integers.
std::vector<Int> scaled_integer_coeffs(const std::vector<Rational>& cs, const Int& l) {
  std::vector<Int> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(c.num() * (l / c.den()));
  return out;
}

struct IntRing {
  using value_type = Int;
  Int zero() const { return Int(0); }
  Int one() const { return Int(1); }
  bool is_zero(const Int& a) const { return a == 0; }
  Int mul(const Int& a, const Int& b) const { return a * b; }
  Int sub(const Int& a, const Int& b) const { return a - b; }
  Int div(Int a, const Int& b) const { return a / b; }  // exact by Bareiss
  Int neg(const Int& a) const { return -a; }
};

}  // namespace

// ---------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(Int x0, Int x1) : x0_(std::move(x0)), x1_(std::move(x1)) {
  if (x0_ == 0 && x1_ == 0) throw std::invalid_argument("point cannot be [0:0]");
  const Int g = boost::multiprecision::gcd(x0_, x1_);
  x0_ /= g;
  x1_ /= g;
  if ((x0_ != 0 ? x0_ : x1_) < 0) {
    x0_ = -x0_;
    x1_ = -x1_;
  }
}

ProjPoint ProjPoint::from_rationals(const Rational& x0, const Rational& x1) {
  return ProjPoint(x0.num() * x1.den(), x1.num() * x0.den());
}

std::string ProjPoint::str() const {
  return "[" + x0_.str() + ":" + x1_.str() + "]";
}

// --------------------------------------------------------------- BinaryForm

BinaryForm::BinaryForm(int degree) {
  if (degree < 0) throw std::invalid_argument("negative form degree");
  coeffs_.resize(static_cast<std::size_t>(degree) + 1);
}

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1)
    throw std::invalid_argument("coefficient count must be degree + 1");
}

BinaryForm BinaryForm::constant(Rational c) { return BinaryForm(0, {std::move(c)}); }

BinaryForm BinaryForm::linear_through(const ProjPoint& p) {
  return BinaryForm(1, {Rational(-p.x0()), Rational(p.x1())});
}

bool BinaryForm::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

int BinaryForm::top_index() const noexcept {
  for (int k = degree(); k >= 0; --k)
    if (!coeffs_[static_cast<std::size_t>(k)].is_zero()) return k;
  return -1;
}

int BinaryForm::low_index() const noexcept {
  for (int k = 0; k <= degree(); ++k)
    if (!coeffs_[static_cast<std::size_t>(k)].is_zero()) return k;
  return -1;
}

BinaryForm BinaryForm::monic() const {
  const int top = top_index();
  if (top < 0) return *this;
  const Rational lead = coeffs_[static_cast<std::size_t>(top)];
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c /= lead;
  return BinaryForm(degree(), std::move(out));
}

BinaryForm BinaryForm::primitive() const {
  const int top = top_index();
  if (top < 0) return *this;
  const Int l = lcm_of_denominators(coeffs_);
  std::vector<Int> ints = scaled_integer_coeffs(coeffs_, l);
  Int g(0);
  for (const auto& v : ints) g = boost::multiprecision::gcd(g, v);
  if (ints[static_cast<std::size_t>(top)] < 0) g = -g;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(v / g);
  return BinaryForm(degree(), std::move(out));
}

BinaryForm BinaryForm::derivative_s() const {
  if (degree() == 0) return BinaryForm(0);
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    out[k - 1] = Rational(static_cast<int>(k)) * coeffs_[k];
  return BinaryForm(degree() - 1, std::move(out));
}

BinaryForm BinaryForm::derivative_t() const {
  if (degree() == 0) return BinaryForm(0);
  const int d = degree();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (int k = 0; k < d; ++k)
    out[static_cast<std::size_t>(k)] = Rational(d - k) * coeffs_[static_cast<std::size_t>(k)];
  return BinaryForm(d - 1, std::move(out));
}

BinaryForm BinaryForm::operator-() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return BinaryForm(degree(), std::move(out));
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in form addition");
  std::vector<Rational> out(a.coeffs_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeffs_[k] + b.coeffs_[k];
  return BinaryForm(a.degree(), std::move(out));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BinaryForm(a.degree() + b.degree(), std::move(out));
}

BinaryForm operator*(const Rational& c, const BinaryForm& f) {
  std::vector<Rational> out;
  out.reserve(f.coeffs_.size());
  for (const auto& v : f.coeffs_) out.push_back(c * v);
  return BinaryForm(f.degree(), std::move(out));
}

std::string BinaryForm::str(const char* s, const char* t) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const int d = degree();
  bool first = true;
  for (int k = d; k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const Rational mag = hopf::abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit_coeff = (mag == Rational(1)) && k + (d - k) > 0;
    if (!unit_coeff) os << mag.str();
    bool star = !unit_coeff;
    if (k > 0) {
      if (star) os << "*";
      os << s;
      if (k > 1) os << "^" << k;
      star = true;
    }
    if (d - k > 0) {
      if (star) os << "*";
      os << t;
      if (d - k > 1) os << "^" << (d - k);
    }
  }
  return os.str();
}

// ------------------------------------------------------------- free helpers

namespace {

// Drop alpha trailing (t-power) coefficient slots; caller checked they vanish.
BinaryForm strip_t_power(const BinaryForm& f, int alpha) {
  std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end() - alpha);
  return BinaryForm(f.degree() - alpha, std::move(out));
}

UPoly dehomogenize(const BinaryForm& f) {
  UPoly u = f.coeffs();
  detail::up_trim(u);
  return u;
}

BinaryForm homogenize(const UPoly& u, int declared_degree) {
  std::vector<Rational> out(static_cast<std::size_t>(declared_degree) + 1);
  for (std::size_t k = 0; k < u.size(); ++k) out[k] = u[k];
  return BinaryForm(declared_degree, std::move(out));
}

}  // namespace

Rational bf_eval(const BinaryForm& f, const ProjPoint& p) {
  const int d = f.degree();
  Rational acc;
  for (int k = 0; k <= d; ++k) {
    const Rational& c = f.coeff(k);
    if (c.is_zero()) continue;
    acc += c * Rational(int_pow(p.x0(), k) * int_pow(p.x1(), d - k));
  }
  return acc;
}

BinaryForm bf_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("undefined gcd");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  // The shared root at [1:0] is the common t-power; everything else, the
  // common s-power included, survives dehomogenization.
  const int tf = f.degree() - f.top_index();
  const int tg = g.degree() - g.top_index();
  const int tcommon = std::min(tf, tg);
  const UPoly h = detail::up_gcd_monic(dehomogenize(f), dehomogenize(g));
  return homogenize(h, detail::up_deg(h) + tcommon);
}

Rational bf_resultant(const BinaryForm& f, const BinaryForm& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 1 || n < 1)
    throw std::invalid_argument("resultant requires declared degrees >= 1");
  const Int lf = lcm_of_denominators(f.coeffs());
  const Int lg = lcm_of_denominators(g.coeffs());
  const std::vector<Int> a = scaled_integer_coeffs(f.coeffs(), lf);
  const std::vector<Int> b = scaled_integer_coeffs(g.coeffs(), lg);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Int>> syl(size, std::vector<Int>(size, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) syl[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = a[static_cast<std::size_t>(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) syl[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = b[static_cast<std::size_t>(n - j)];
  const Int det = bareiss_determinant(std::move(syl), IntRing{});
  return Rational(det) / Rational(int_pow(lf, n) * int_pow(lg, m));
}

SquarefreeDecomposition squarefree_decomposition(const BinaryForm& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot decompose the zero form");
  const int d = f.degree();
  const int top = f.top_index();
  const int alpha = d - top;       // multiplicity of [1:0], the t-power
  const int beta = f.low_index();  // multiplicity of [0:1], the s-power

  UPoly core(f.coeffs().begin() + beta, f.coeffs().begin() + top + 1);
  SquarefreeDecomposition out;
  out.unit = core.back();
  core = detail::up_monic(std::move(core));

  std::map<int, BinaryForm> parts;
  if (detail::up_deg(core) >= 1) {
    // Yun's algorithm over Q.
    UPoly dc = detail::up_derivative(core);
    UPoly g = detail::up_gcd_monic(core, dc);
    UPoly c = detail::up_divmod(core, g).first;
    UPoly rest = detail::up_sub(detail::up_divmod(dc, g).first, detail::up_derivative(c));
    for (int i = 1; detail::up_deg(c) > 0; ++i) {
      UPoly a = detail::up_gcd_monic(c, rest);
      if (detail::up_deg(a) > 0)
        parts.emplace(i, homogenize(a, detail::up_deg(a)));
      c = detail::up_divmod(c, a).first;
      rest = detail::up_sub(detail::up_divmod(rest, a).first, detail::up_derivative(c));
    }
  }

  const auto merge = [&parts](int exponent, const BinaryForm& factor) {
    auto [it, inserted] = parts.emplace(exponent, factor);
    if (!inserted) it->second = it->second * factor;
  };
  if (beta > 0) merge(beta, BinaryForm(1, {Rational(0), Rational(1)}));   // s
  if (alpha > 0) merge(alpha, BinaryForm(1, {Rational(1), Rational(0)})); // t

  for (auto& [exponent, factor] : parts)
    out.parts.push_back({exponent, std::move(factor)});
  return out;
}

BinaryForm SquarefreeDecomposition::reassemble() const {
  BinaryForm acc = BinaryForm::constant(unit);
  for (const auto& part : parts)
    for (int i = 0; i < part.exponent; ++i) acc = acc * part.factor;
  return acc;
}

int SquarefreeDecomposition::weighted_degree() const {
  int sum = 0;
  for (const auto& part : parts) sum += part.exponent * part.factor.degree();
  return sum;
}

int root_multiplicity_at(const BinaryForm& f, const ProjPoint& p) {
  if (f.is_zero()) throw std::invalid_argument("zero form has no root multiplicity");
  const BinaryForm line = BinaryForm::linear_through(p);
  BinaryForm rest = f;
  int k = 0;
  while (rest.degree() >= 1 && bf_eval(rest, p).is_zero()) {
    rest = bf_exact_div(rest, line);
    ++k;
  }
  return k;
}

BinaryForm bf_exact_div(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw std::domain_error("division by zero form");
  if (f.is_zero()) return BinaryForm(std::max(f.degree() - g.degree(), 0));
  if (f.degree() < g.degree()) throw std::domain_error("form quotient has negative degree");
  const int tg = g.degree() - g.top_index();
  if (f.degree() - f.top_index() < tg) throw std::domain_error("form division is not exact");
  const BinaryForm f1 = tg > 0 ? strip_t_power(f, tg) : f;
  const BinaryForm g1 = tg > 0 ? strip_t_power(g, tg) : g;
  auto [q, r] = detail::up_divmod(dehomogenize(f1), dehomogenize(g1));
  if (!detail::up_is_zero(r)) throw std::domain_error("form division is not exact");
  return homogenize(q, f1.degree() - g1.degree());
}

// ---------------------------------------------------- rational root hunting

namespace {

// Trial-division factorization, capped: a leftover cofactor > cap^2 is kept
// as a single pseudo-prime, so the divisor list may be incomplete for huge
// coefficients.  Only root *finding* degrades; nothing downstream miscounts.
std::vector<Int> divisors_capped(Int n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Int, int>> factors;
  static const long cap = 1000000L;
  for (long p = 2; p <= cap && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(Int(p), e);
    }
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    Int pk(1);
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) {
        divs.push_back(divs[j] * pk);
        if (divs.size() > 4096) return divs;  // defensive cap
      }
    }
  }
  return divs;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const Int sn = boost::multiprecision::sqrt(r.num());
  const Int sd = boost::multiprecision::sqrt(r.den());
  if (sn * sn != r.num() || sd * sd != r.den()) return std::nullopt;
  return Rational(sn, sd);
}

// One rational root of a form with nonzero constant and leading coefficient,
// or nullopt.  Complete for degrees 1 and 2; rational-root test above.
std::optional<ProjPoint> find_one_rational_root(const BinaryForm& g) {
  const int d = g.degree();
  if (d == 1) return ProjPoint::from_rationals(-g.coeff(0), g.coeff(1));
  if (d == 2) {
    const Rational disc = g.coeff(1) * g.coeff(1) - Rational(4) * g.coeff(2) * g.coeff(0);
    const auto root = rational_sqrt(disc);
    if (!root) return std::nullopt;
    return ProjPoint::from_rationals((-g.coeff(1) + *root) / (Rational(2) * g.coeff(2)),
                                     Rational(1));
  }
  const BinaryForm prim = g.primitive();
  const Int& lead = prim.coeff(d).num();
  const Int& constant = prim.coeff(0).num();
  for (const Int& p : divisors_capped(constant))
    for (const Int& q : divisors_capped(lead)) {
      const ProjPoint plus(p, q);
      if (bf_eval(prim, plus).is_zero()) return plus;
      const ProjPoint minus(-p, q);
      if (bf_eval(prim, minus).is_zero()) return minus;
    }
  return std::nullopt;
}

}  // namespace

std::pair<std::vector<std::pair<ProjPoint, int>>, BinaryForm>
split_rational_roots(const BinaryForm& f) {
  if (f.is_zero()) throw std::invalid_argument("zero form has no roots");
  std::vector<std::pair<ProjPoint, int>> roots;
  BinaryForm rest = f;
  const auto take = [&roots, &rest](const ProjPoint& p) {
    const int m = root_multiplicity_at(rest, p);
    roots.emplace_back(p, m);
    const BinaryForm line = BinaryForm::linear_through(p);
    for (int i = 0; i < m; ++i) rest = bf_exact_div(rest, line);
  };
  if (rest.degree() > rest.top_index()) take(ProjPoint(1, 0));
  if (rest.low_index() > 0) take(ProjPoint(0, 1));
  while (rest.degree() >= 1) {
    const auto p = find_one_rational_root(rest);
    if (!p) break;
    take(*p);
  }
  return {std::move(roots), std::move(rest)};
}

}  // namespace hopf

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hopf {

using Int = boost::multiprecision::cpp_int;

/// Reduced fraction over arbitrary-precision integers.
/// Invariants: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p" when the denominator is 1, else "p/q".
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Accepts the same two shapes that str() emits.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

private:
  static Int parse_int(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw std::invalid_argument("malformed rational: empty integer part");
    for (std::size_t j = i; j < text.size(); ++j)
      if (text[j] < '0' || text[j] > '9')
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    Int value(std::string(text.substr(text[0] == '+' ? 1 : 0)));
    return value;
  }

  void normalize() {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace hopf

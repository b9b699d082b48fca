#include "hopf/linsys.hpp"

#include "hopf/rng.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace hopf {

namespace {

Int int_pow(const Int& base, int exp) {
  Int r(1);
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// k (k-1) ... (k-j+1); the j-th derivative of z^k picks this up.
Int falling_factorial(int k, int j) {
  Int r(1);
  for (int i = 0; i < j; ++i) r *= k - i;
  return r;
}

}  // namespace

// ------------------------------------------------------------ FatPointScheme

FatPointScheme::FatPointScheme(std::vector<FatPoint> points) : points_(std::move(points)) {
  for (const auto& fp : points_) {
    if (fp.theta_index < 0 || fp.theta_index > 3)
      throw std::invalid_argument("theta index out of range");
    if (fp.multiplicity < 1)
      throw std::invalid_argument("fat point multiplicity must be positive");
  }
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i].theta_index == points_[j].theta_index && points_[i].x == points_[j].x)
        throw std::invalid_argument("duplicate fat point");
}

int FatPointScheme::degree() const {
  int sum = 0;
  for (const auto& fp : points_) sum += fp.multiplicity;
  return sum;
}

std::vector<int> FatPointScheme::mentioned_thetas() const {
  std::vector<int> out;
  for (const auto& fp : points_) out.push_back(fp.theta_index);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------- condition matrix

ConditionMatrix condition_matrix(const FatPointScheme& z, int n, const ThetaConfig& t) {
  if (n < 1) throw std::invalid_argument("interpolation needs n >= 1");
  for (const auto& fp : z.points())
    if (fp.multiplicity > n + 1)
      throw std::invalid_argument("condition exceeds fiber degree");

  const std::size_t cols = 2 * static_cast<std::size_t>(n) + 2;
  QMatrix m(static_cast<std::size_t>(z.degree()), cols);
  std::size_t row = 0;
  for (const auto& fp : z.points()) {
    const ProjPoint& a = t.theta(fp.theta_index);
    const std::size_t qcol = static_cast<std::size_t>(n) + 1;
    if (fp.x.is_infinity()) {
      // Reciprocal chart t/s: order-j vanishing at [1:0] kills the top
      // fiber-form coefficients one by one.
      for (int j = 0; j < fp.multiplicity; ++j, ++row) {
        m.at(row, static_cast<std::size_t>(n - j)) = Rational(a.x0());
        m.at(row, qcol + static_cast<std::size_t>(n - j)) = Rational(a.x1());
      }
    } else {
      // Chart s/t at x0/x1, each row scaled by x1^(n-j) to stay integral.
      for (int j = 0; j < fp.multiplicity; ++j, ++row) {
        for (int k = j; k <= n; ++k) {
          const Int e = falling_factorial(k, j) * int_pow(fp.x.x0(), k - j) *
                        int_pow(fp.x.x1(), n - k);
          m.at(row, static_cast<std::size_t>(k)) = Rational(a.x0() * e);
          m.at(row, qcol + static_cast<std::size_t>(k)) = Rational(a.x1() * e);
        }
      }
    }
  }
  const std::size_t rank = qm_rank(m);
  return ConditionMatrix(std::move(m), rank);
}

int h0(const FatPointScheme& z, int n, const ThetaConfig& t) {
  return 2 * n + 2 - static_cast<int>(condition_matrix(z, n, t).rank());
}

std::vector<GraphCurve> kernel_basis(const FatPointScheme& z, int n, const ThetaConfig& t) {
  const ConditionMatrix cm = condition_matrix(z, n, t);
  std::vector<std::vector<Rational>> kernel = qm_kernel_basis(cm.matrix());
  if (kernel.empty()) throw std::domain_error("empty linear system");

  std::vector<GraphCurve> basis;
  basis.reserve(kernel.size());
  for (auto& v : kernel) {
    // Clear to a primitive integer vector with positive first nonzero entry.
    Int l(1);
    for (const auto& c : v) l = boost::multiprecision::lcm(l, c.den());
    std::vector<Int> w;
    w.reserve(v.size());
    for (const auto& c : v) w.push_back(c.num() * (l / c.den()));
    Int g(0);
    for (const auto& e : w) g = boost::multiprecision::gcd(g, e);
    for (const auto& e : w)
      if (e != 0) {
        if (e < 0) g = -g;
        break;
      }
    std::vector<Rational> p(w.begin(), w.begin() + n + 1), q(w.begin() + n + 1, w.end());
    for (auto& c : p) c /= Rational(g);
    for (auto& c : q) c /= Rational(g);
    basis.emplace_back(n, BinaryForm(n, std::move(p)), BinaryForm(n, std::move(q)));
  }
  return basis;
}

// ------------------------------------------------------------ general member

GraphCurve general_member(const FatPointScheme& z, int n, std::uint64_t seed,
                          int max_attempts, long coefficient_bound, const ThetaConfig& t) {
  const std::vector<GraphCurve> basis = kernel_basis(z, n, t);

  // Weight each mentioned fiber must carry: exactly the prescribed contacts.
  std::map<int, int> expected_weight;
  for (const auto& fp : z.points()) expected_weight[fp.theta_index] += fp.multiplicity - 1;

  SplitMix64 rng(seed);
  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Rational> lambda(basis.size());
    bool all_zero = true;
    while (all_zero) {
      for (auto& c : lambda) {
        c = Rational(rng.uniform(-coefficient_bound, coefficient_bound));
        all_zero = all_zero && c.is_zero();
      }
    }
    BinaryForm p(n), q(n);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      p = p + lambda[j] * basis[j].P();
      q = q + lambda[j] * basis[j].Q();
    }
    if (p.is_zero() && q.is_zero()) continue;  // cannot happen for a true basis
    const GraphCurve candidate(n, std::move(p), std::move(q));

    if (!candidate.smooth()) {
      last_failure = "candidate not smooth";
      continue;
    }
    bool ok = true;
    for (const auto& fp : z.points()) {
      const int got = root_multiplicity_at(fiber_form(candidate, t.theta(fp.theta_index)), fp.x);
      if (got != fp.multiplicity) {
        last_failure = "multiplicity " + std::to_string(got) + " instead of " +
                       std::to_string(fp.multiplicity) + " at " + fp.x.str();
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (int i = 0; i < 4 && ok; ++i) {
      const int w = profile(candidate, t.theta(i)).weight();
      const auto it = expected_weight.find(i);
      const int want = it == expected_weight.end() ? 0 : it->second;
      if (w != want) {
        last_failure = "fiber " + std::to_string(i + 1) + " has weight " +
                       std::to_string(w) + ", wanted " + std::to_string(want);
        ok = false;
      }
    }
    if (ok) return candidate;
  }
  throw std::domain_error("no general member found after " + std::to_string(max_attempts) +
                          " attempts; last failure: " + last_failure);
}

// ------------------------------------------------------ stratum constructors

namespace {

ProjPoint random_base_point(SplitMix64& rng) {
  const long u = rng.uniform(0, 25);
  if (u == 25) return ProjPoint(1, 0);
  return ProjPoint(Int(u - 12), Int(1));
}

ProjPoint random_base_point_distinct(SplitMix64& rng, const std::vector<ProjPoint>& taken) {
  while (true) {
    const ProjPoint p = random_base_point(rng);
    if (std::find(taken.begin(), taken.end(), p) == taken.end()) return p;
  }
}

ConstructionResult finish_construction(FatPointScheme z, int n, std::uint64_t seed,
                                       int free_points, const ThetaConfig& t) {
  const ConditionMatrix cm = condition_matrix(z, n, t);
  const int rank = static_cast<int>(cm.rank());
  GraphCurve member = general_member(z, n, derive_seed(seed, 1), 64, 100, t);
  Classification c = classify(member, t);
  const Certificate cert{z.degree(), rank, 2 * n + 2 - rank};
  return ConstructionResult{std::move(member), c,          std::move(z), cert,
                            free_points,       rank - free_points, seed};
}

}  // namespace

ConstructionResult construct_tangency_stratum(const std::vector<int>& pattern, int n,
                                              std::uint64_t seed, const ThetaConfig& t) {
  if (pattern.empty() || pattern.size() > 3)
    throw std::invalid_argument("tangency pattern must list 1 to 3 thetas");
  for (const int i : pattern)
    if (i < 0 || i > 3) throw std::invalid_argument("theta index out of range");
  for (std::size_t i = 0; i < pattern.size(); ++i)
    for (std::size_t j = i + 1; j < pattern.size(); ++j)
      if (pattern[i] == pattern[j])
        throw std::invalid_argument("pattern thetas must be distinct");
  const int needed = pattern.size() == 3 ? 4 : 2;
  if (n < needed) throw std::invalid_argument("n below theorem threshold");

  SplitMix64 rng(derive_seed(seed, 0));
  std::vector<ProjPoint> taken;
  std::vector<FatPoint> points;
  points.reserve(pattern.size());
  for (const int i : pattern) {
    // Distinct base coordinates even across lines: a shared one would force
    // a common root of P and Q, leaving the stratum without smooth members.
    const ProjPoint p = random_base_point_distinct(rng, taken);
    taken.push_back(p);
    points.push_back({i, p, 2});
  }
  return finish_construction(FatPointScheme(std::move(points)), n, seed,
                             static_cast<int>(pattern.size()), t);
}

ConstructionResult construct_max_weight(int i1, int i2, int n, std::uint64_t seed,
                                        const ThetaConfig& t) {
  if (i1 < 0 || i1 > 3 || i2 < 0 || i2 > 3)
    throw std::invalid_argument("theta index out of range");
  if (i1 == i2) throw std::invalid_argument("theta indices must differ");
  if (n < 2) throw std::invalid_argument("n below theorem threshold");

  SplitMix64 rng(derive_seed(seed, 0));
  const ProjPoint p = random_base_point(rng);
  const ProjPoint q = random_base_point_distinct(rng, {p});  // p1 != q1 required
  const FatPointScheme z({{i1, p, n}, {i2, q, n}});
  if (h0(z, n, t) != 2) throw std::domain_error("dimension anomaly");
  return finish_construction(z, n, seed, 2, t);
}

ConstructionResult construct_profile_stratum(int theta_index, std::vector<int> profile,
                                             int n, std::uint64_t seed,
                                             const ThetaConfig& t) {
  if (theta_index < 0 || theta_index > 3)
    throw std::invalid_argument("theta index out of range");
  if (profile.empty()) throw std::invalid_argument("profile must not be empty");
  int sum = 0;
  for (const int m : profile) {
    if (m < 1) throw std::invalid_argument("profile entries must be positive");
    sum += m;
  }
  if (sum > n) throw std::invalid_argument("profile sum exceeds fiber degree");

  SplitMix64 rng(derive_seed(seed, 0));
  std::vector<ProjPoint> taken;
  std::vector<FatPoint> points;
  for (const int m : profile) {
    const ProjPoint p = random_base_point_distinct(rng, taken);
    taken.push_back(p);
    points.push_back({theta_index, p, m});
  }
  return finish_construction(FatPointScheme(std::move(points)), n, seed,
                             static_cast<int>(profile.size()), t);
}

}  // namespace hopf

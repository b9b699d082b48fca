#include "hopf/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <utility>

#include "hopf/betti.hpp"
#include "hopf/binform.hpp"
#include "hopf/graph.hpp"
#include "hopf/json_io.hpp"
#include "hopf/linsys.hpp"
#include "hopf/rng.hpp"
#include "hopf/spectral.hpp"
#include "hopf/survey.hpp"

namespace hopf {

using nlohmann::json;

namespace {

struct Checker {
  SuiteResult r;
  explicit Checker(std::string name) {
    r.name = std::move(name);
    r.passed = true;
    r.certificate = json::object();
  }
  /* records the first failure (message + witness) and keeps counting */
  bool check(bool ok, const std::string& what, const json& witness = {}) {
    ++r.checks;
    if (!ok && r.passed) {
      r.passed = false;
      r.detail = what;
      if (!witness.is_null()) r.certificate["counterexample"] = witness;
    }
    return ok;
  }
};

template <class Body>
SuiteResult run_suite(std::string name, Body&& body) {
  Checker c(std::move(name));
  try {
    body(c);
  } catch (const std::exception& e) {
    c.r.passed = false;
    ++c.r.checks;
    if (c.r.detail.empty()) c.r.detail = std::string("unexpected exception: ") + e.what();
  }
  return std::move(c.r);
}

std::string with_n(const char* label, int n) {
  return std::string(label) + " n=" + std::to_string(n);
}

ProjPoint random_point(SplitMix64& rng) {
  long k = rng.uniform(0, 40);
  if (k == 40) return ProjPoint(Int(1), Int(0));
  return ProjPoint(Int(k - 20), Int(1));
}

ProjPoint random_point_avoiding(SplitMix64& rng, const std::vector<ProjPoint>& used) {
  for (;;) {
    ProjPoint p = random_point(rng);
    bool clash = false;
    for (const auto& u : used)
      if (u == p) { clash = true; break; }
    if (!clash) return p;
  }
}

std::array<int, 4> unit_weights(std::initializer_list<int> idxs) {
  std::array<int, 4> w{0, 0, 0, 0};
  for (int i : idxs) w[static_cast<std::size_t>(i)] += 1;
  return w;
}

void partitions_min2(int remaining, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 2; --p) {
    if (remaining - p == 1) continue;  // a trailing part 1 is not allowed
    cur.push_back(p);
    partitions_min2(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

/// All non-increasing part-lists with entries >= 2 and 2 <= sum <= n.
std::vector<std::vector<int>> restricted_profiles_up_to(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int k = 2; k <= n; ++k) partitions_min2(k, k, cur, out);
  return out;
}

std::string fraction_string(int num, int den) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", den == 0 ? 0.0 : static_cast<double>(num) / den);
  return buf;
}

}  // namespace

SuiteResult suite_weight_bound(int n, int samples, long bound, std::uint64_t seed) {
  return run_suite(with_n("weight bound", n), [&](Checker& c) {
    const int cap = 2 * n - 2;
    int smooth_count = 0;
    for (int i = 0; i < samples; ++i) {
      SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      GraphCurve d = random_curve(n, bound, rng);
      if (!d.smooth()) continue;
      ++smooth_count;
      Classification cl = classify(d);
      c.check(cl.total <= cap, "random smooth curve exceeds the weight bound", curve_json(d));
    }
    ConstructionResult mw = construct_max_weight(0, 1, n, derive_seed(seed, 0x4d57ull));
    c.check(mw.classification.total == cap, "full-contact construction misses the bound",
            construction_json(mw));
    c.check(mw.classification.kind == Kind::irregular,
            "full-contact construction not classified irregular");
    ConstructionResult tp = construct_tangency_stratum({0, 1}, n, derive_seed(seed, 0x5450ull));
    c.check(tp.classification.total <= cap, "tangency construction exceeds the weight bound",
            construction_json(tp));
    c.r.certificate["samples"] = samples;
    c.r.certificate["smooth_samples"] = smooth_count;
    c.r.certificate["bound"] = cap;
    c.r.certificate["max_weight_attained"] = mw.classification.total;
  });
}

SuiteResult suite_ramification_count(int n, int samples, long bound, std::uint64_t seed) {
  return run_suite(with_n("ramification count", n), [&](Checker& c) {
    const int expected = 2 * n - 2;
    auto check_curve = [&](const GraphCurve& d) {
      BinaryForm j = ramification_divisor(d);
      c.check(j.degree() == expected, "jacobian degree is not 2n-2", curve_json(d));
      c.check(squarefree_decomposition(j).weighted_degree() == expected,
              "weighted root count of the jacobian is not 2n-2", curve_json(d));
      BinaryForm delta = pencil_discriminant(d);
      c.check(delta.degree() == expected, "pencil discriminant degree is not 2n-2",
              curve_json(d));
      c.check(squarefree_decomposition(delta).weighted_degree() == expected,
              "weighted root count of the discriminant is not 2n-2", curve_json(d));
    };
    int smooth_count = 0;
    for (int i = 0; i < samples; ++i) {
      SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      GraphCurve d = random_curve(n, bound, rng);
      if (!d.smooth()) continue;
      ++smooth_count;
      check_curve(d);
    }
    check_curve(construct_max_weight(2, 3, n, derive_seed(seed, 0x524dull)).curve);
    c.r.certificate["samples"] = samples;
    c.r.certificate["smooth_samples"] = smooth_count;
    c.r.certificate["expected_count"] = expected;
  });
}

SuiteResult suite_discriminant_order(int n, int samples, long bound, std::uint64_t seed) {
  return run_suite(with_n("discriminant order", n), [&](Checker& c) {
    const ThetaConfig& t = standard_thetas();
    auto check_curve = [&](const GraphCurve& d) {
      BinaryForm delta = pencil_discriminant(d);
      Classification cl = classify(d);
      for (int i = 0; i < 4; ++i)
        c.check(root_multiplicity_at(delta, t.theta(i)) ==
                    cl.weights[static_cast<std::size_t>(i)],
                "discriminant order at a theta differs from the profile weight", curve_json(d));
    };
    int smooth_count = 0;
    for (int i = 0; i < samples; ++i) {
      SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      GraphCurve d = random_curve(n, bound, rng);
      if (!d.smooth()) continue;
      ++smooth_count;
      check_curve(d);
    }
    for (int i = 0; i < 4; ++i)
      check_curve(
          construct_tangency_stratum({i}, n, derive_seed(seed, 0x100ull + static_cast<std::uint64_t>(i)))
              .curve);
    check_curve(construct_max_weight(0, 1, n, derive_seed(seed, 0x200ull)).curve);
    c.r.certificate["samples"] = samples;
    c.r.certificate["smooth_samples"] = smooth_count;
  });
}

SuiteResult suite_spectral_dichotomy(int n, int samples, long bound, std::uint64_t seed) {
  return run_suite(with_n("spectral dichotomy", n), [&](Checker& c) {
    int smooth_count = 0;
    for (int i = 0; i < samples; ++i) {
      SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      GraphCurve d = random_curve(n, bound, rng);
      if (!d.smooth()) continue;
      ++smooth_count;
      SpectralData sp = spectral_invariants(d);
      Classification cl = classify(d);
      c.check(sp.smooth == (cl.kind == Kind::regular),
              "spectral smoothness disagrees with the classification", curve_json(d));
      c.check(sp.arithmetic_genus == 2 * n - 1, "arithmetic genus is not 2n-1", curve_json(d));
      c.check(sp.smooth == (sp.geometric_genus == sp.arithmetic_genus),
              "genus drop disagrees with smoothness", curve_json(d));
    }
    for (int i = 0; i < 4; ++i) {
      ConstructionResult w =
          construct_tangency_stratum({i}, n, derive_seed(seed, 0x300ull + static_cast<std::uint64_t>(i)));
      SpectralData sp = spectral_invariants(w.curve);
      c.check(w.classification.kind == Kind::irregular, "tangency witness not irregular",
              construction_json(w));
      c.check(!sp.smooth, "tangency witness has a smooth spectral cover", construction_json(w));
      c.check(sp.arithmetic_genus == 2 * n - 1, "witness arithmetic genus is not 2n-1");
      c.check(sp.geometric_genus == 2 * n - 2, "a single node should drop the genus by one",
              construction_json(w));
      bool node_on_line = false;
      for (const auto& s : sp.singular_points)
        if (s.theta_index == i && s.multiplicity == 2 && s.local_type() == "A1")
          node_on_line = true;
      c.check(node_on_line, "witness node not found on the prescribed line",
              construction_json(w));
    }
    c.r.certificate["samples"] = samples;
    c.r.certificate["smooth_samples"] = smooth_count;
  });
}

SuiteResult suite_genus_cross_check(int n, int samples, long bound, std::uint64_t seed) {
  return run_suite(with_n("genus cross-check", n), [&](Checker& c) {
    int smooth_count = 0;
    for (int i = 0; i < samples; ++i) {
      SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      GraphCurve d = random_curve(n, bound, rng);
      if (!d.smooth()) continue;
      ++smooth_count;
      c.check(genus_parity_check(spectral_invariants(d)),
              "delta-ledger genus disagrees with the branch-parity genus", curve_json(d));
    }
    ConstructionResult mw = construct_max_weight(0, 1, n, derive_seed(seed, 0x400ull));
    SpectralData sp = spectral_invariants(mw.curve);
    c.check(genus_parity_check(sp), "parity fails on the two-line full-contact curve",
            construction_json(mw));
    c.check(sp.geometric_genus == 2 * n - 1 - 2 * (n / 2),
            "two-line full-contact genus differs from the delta formula", construction_json(mw));
    ConstructionResult single = construct_profile_stratum(2, {n}, n, derive_seed(seed, 0x401ull));
    SpectralData sps = spectral_invariants(single.curve);
    c.check(genus_parity_check(sps), "parity fails on the one-line full-contact curve",
            construction_json(single));
    c.check(sps.geometric_genus == 2 * n - 1 - n / 2,
            "one-line full-contact genus differs from the delta formula",
            construction_json(single));
    ConstructionResult node = construct_profile_stratum(3, {2}, n, derive_seed(seed, 0x402ull));
    SpectralData spn = spectral_invariants(node.curve);
    c.check(genus_parity_check(spn), "parity fails on the nodal curve", construction_json(node));
    c.check(spn.geometric_genus == 2 * n - 2, "nodal genus differs from the delta formula",
            construction_json(node));
    if (n >= 5) {
      ConstructionResult mix = construct_profile_stratum(0, {3, 2}, n, derive_seed(seed, 0x403ull));
      SpectralData spm = spectral_invariants(mix.curve);
      c.check(genus_parity_check(spm), "parity fails on the mixed-profile curve",
              construction_json(mix));
      c.check(spm.geometric_genus == 2 * n - 3,
              "mixed-profile genus differs from the delta formula", construction_json(mix));
    }
    c.r.certificate["samples"] = samples;
    c.r.certificate["smooth_samples"] = smooth_count;
  });
}

SuiteResult suite_interpolation(int n, int samples, std::uint64_t seed) {
  return run_suite(with_n("interpolation dimension", n), [&](Checker& c) {
    for (int trial = 0; trial < samples; ++trial) {
      SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
      int theta_i = static_cast<int>(rng.uniform(0, 3));
      int degz = static_cast<int>(rng.uniform(1, n));
      std::vector<FatPoint> pts;
      std::vector<ProjPoint> used;
      int remaining = degz;
      while (remaining > 0) {
        int m = static_cast<int>(rng.uniform(1, remaining));
        ProjPoint x = random_point_avoiding(rng, used);
        used.push_back(x);
        pts.push_back(FatPoint{theta_i, x, m});
        remaining -= m;
      }
      FatPointScheme z(pts);
      c.check(static_cast<int>(condition_matrix(z, n).rank()) == degz,
              "single-line scheme fails to impose independent conditions", scheme_json(z));
      c.check(h0(z, n) == 2 * n + 2 - degz, "h0 differs from 2n+2 - deg Z", scheme_json(z));
      ProjPoint q = random_point_avoiding(rng, used);
      pts.push_back(FatPoint{theta_i, q, 1});
      FatPointScheme zq(pts);
      c.check(static_cast<int>(condition_matrix(zq, n).rank()) == degz + 1,
              "an extra simple point fails to raise the rank by one", scheme_json(zq));
    }
    SplitMix64 rng(derive_seed(seed, 0x9999ull));
    ProjPoint p = random_point(rng);
    ProjPoint q = random_point_avoiding(rng, std::vector<ProjPoint>{p});
    FatPointScheme z(std::vector<FatPoint>{FatPoint{0, p, n}, FatPoint{1, q, n}});
    c.check(h0(z, n) == 2, "two-line full-contact scheme does not have h0 = 2", scheme_json(z));
    c.r.certificate["samples"] = samples;
    c.r.certificate["h0_full_contact"] = h0(z, n);
  });
}

SuiteResult suite_strata(int n, std::uint64_t seed) {
  return run_suite(with_n("stratum constructors", n), [&](Checker& c) {
    std::uint64_t k = 0;
    int pair_count = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        ConstructionResult r = construct_tangency_stratum({i, j}, n, derive_seed(seed, k++));
        ++pair_count;
        c.check(r.codimension == 2, "tangency pair codimension is not 2", construction_json(r));
        c.check(r.classification.weights == unit_weights({i, j}),
                "tangency pair weights are not the two unit weights", construction_json(r));
        c.check(r.curve.smooth(), "tangency pair witness is not smooth");
      }
    int triple_count = 0;
    if (n >= 4) {
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int l = 0; l < 4; ++l) {
            if (i == j || i == l || j == l) continue;
            ConstructionResult r =
                construct_tangency_stratum({i, j, l}, n, derive_seed(seed, 0x1000ull + k++));
            ++triple_count;
            c.check(r.codimension == 3, "tangency triple codimension is not 3",
                    construction_json(r));
            c.check(r.classification.weights == unit_weights({i, j, l}),
                    "tangency triple weights are not the three unit weights",
                    construction_json(r));
            c.check(r.curve.smooth(), "tangency triple witness is not smooth");
          }
    }
    int profile_count = 0;
    const ThetaConfig& t = standard_thetas();
    for (const auto& parts : restricted_profiles_up_to(n)) {
      int theta_i = profile_count % 4;
      ConstructionResult r = construct_profile_stratum(
          theta_i, parts, n, derive_seed(seed, 0x2000ull + static_cast<std::uint64_t>(profile_count)));
      ++profile_count;
      int sum = 0;
      for (int m : parts) sum += m;
      const int expect_codim = sum - static_cast<int>(parts.size());
      c.check(profile(r.curve, t.theta(theta_i)).reduced() == parts,
              "restricted profile of the witness differs from the target", construction_json(r));
      c.check(r.codimension == expect_codim,
              "profile stratum codimension differs from sum(m-1)", construction_json(r));
      c.check(r.classification.total == expect_codim, "witness weight differs from sum(m-1)",
              construction_json(r));
    }
    c.r.certificate["pairs"] = pair_count;
    c.r.certificate["triples"] = triple_count;
    c.r.certificate["profiles"] = profile_count;
  });
}

SuiteResult suite_genericity(int n, int samples, long bound, std::uint64_t seed) {
  return run_suite(with_n("genericity survey", n), [&](Checker& c) {
    int smooth_count = 0, ordinary = 0;
    json counterexamples = json::array();
    for (int i = 0; i < samples; ++i) {
      SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      GraphCurve d = random_curve(n, bound, rng);
      if (!d.smooth()) continue;
      ++smooth_count;
      RamificationReport rep = ramification_report(d);
      if (rep.jacobian_squarefree && rep.discriminant_squarefree)
        ++ordinary;
      else
        counterexamples.push_back(curve_json(d));
    }
    c.check(ordinary == smooth_count, "non-generic curve in a random sample");
    c.r.certificate["samples"] = samples;
    c.r.certificate["smooth_samples"] = smooth_count;
    c.r.certificate["ordinary"] = ordinary;
    c.r.certificate["fraction"] = fraction_string(ordinary, smooth_count);
    if (!counterexamples.empty()) c.r.certificate["counterexamples"] = counterexamples;
  });
}

SuiteResult suite_weight_tuples(int samples, std::uint64_t seed) {
  return run_suite("weight tuple enumeration n=2", [&](Checker& c) {
    const int n = 2;
    std::set<std::array<int, 4>> expected;
    expected.insert({0, 0, 0, 0});
    for (int mask = 1; mask < 16; ++mask) {
      std::array<int, 4> w{0, 0, 0, 0};
      int total = 0;
      for (int b = 0; b < 4; ++b)
        if (mask & (1 << b)) { w[static_cast<std::size_t>(b)] = 1; ++total; }
      if (total >= 1 && total <= 2) expected.insert(w);
    }
    std::set<std::array<int, 4>> realized;
    auto note = [&](const Classification& cl) {
      realized.insert(cl.weights);
      for (int b = 0; b < 4; ++b)
        c.check(cl.weights[static_cast<std::size_t>(b)] <= 1,
                "a constructor reached an individual weight of 2 at n = 2");
    };
    note(classify(general_member(FatPointScheme{}, n, derive_seed(seed, 0x600ull))));
    for (int i = 0; i < 4; ++i)
      note(construct_tangency_stratum({i}, n, derive_seed(seed, 0x610ull + static_cast<std::uint64_t>(i)))
               .classification);
    std::uint64_t k = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        note(construct_tangency_stratum({i, j}, n, derive_seed(seed, 0x620ull + k++))
                 .classification);
    note(construct_max_weight(0, 3, n, derive_seed(seed, 0x630ull)).classification);
    c.check(realized == expected, "realized weight tuples differ from the expected eleven");
    int smooth_count = 0;
    for (int i = 0; i < samples; ++i) {
      SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      GraphCurve d = random_curve(n, 100, rng);
      if (!d.smooth()) continue;
      ++smooth_count;
      Classification cl = classify(d);
      c.check(expected.count(cl.weights) == 1, "random curve outside the expected tuple set",
              curve_json(d));
      for (int b = 0; b < 4; ++b)
        c.check(cl.weights[static_cast<std::size_t>(b)] <= 1,
                "a random curve reached an individual weight of 2 at n = 2", curve_json(d));
    }
    json tuples = json::array();
    for (const auto& w : realized) tuples.push_back(w);
    c.r.certificate["realized_tuples"] = tuples;
    c.r.certificate["expected_tuples"] = expected.size();
    c.r.certificate["smooth_samples"] = smooth_count;
  });
}

SuiteResult suite_betti_utility() {
  return run_suite("betti convolution utility", [&](Checker& c) {
    auto to_json = [](const BettiVector& v) {
      json a = json::array();
      for (const Int& x : v) a.push_back(x.str());
      return a;
    };
    BettiVector torus = betti_regular_locus(2, {Int(1)});
    BettiVector expected_torus = {Int(1), Int(6), Int(15), Int(20), Int(15), Int(6), Int(1)};
    c.check(torus == expected_torus, "n=2 convolution with (1) is not the C(6,k) row",
            to_json(torus));
    BettiVector shifted = betti_regular_locus(2, {Int(1), Int(1)});
    BettiVector expected_shifted = {Int(1),  Int(7),  Int(21), Int(35),
                                    Int(35), Int(21), Int(7),  Int(1)};
    c.check(shifted == expected_shifted, "n=2 convolution with (1,1) is not the C(7,k) row",
            to_json(shifted));
    for (int n = 2; n <= 5; ++n) {
      SplitMix64 rng(0x42ull + static_cast<std::uint64_t>(n));
      BettiVector a(static_cast<std::size_t>(rng.uniform(1, 2 * n + 2)));
      for (auto& x : a) x = Int(rng.uniform(0, 5));
      a.back() = Int(1);
      BettiVector out = betti_regular_locus(n, a);
      c.check(static_cast<int>(out.size()) - 1 < 6 * n, "output support reaches degree 6n",
              to_json(out));
    }
    bool rejected = false;
    try {
      betti_regular_locus(2, BettiVector(static_cast<std::size_t>(2 * 2 + 3), Int(1)));
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    c.check(rejected, "support above 2n+1 was not rejected");
  });
}

SuiteResult suite_determinism(int n, std::uint64_t seed) {
  return run_suite(with_n("determinism", n), [&](Checker& c) {
    SurveyStats s1 = run_survey(n, 40, 100, seed);
    SurveyStats s2 = run_survey(n, 40, 100, seed);
    c.check(survey_csv(s1) == survey_csv(s2), "survey CSV differs between identical runs");
    c.check(survey_json(s1).dump() == survey_json(s2).dump(),
            "survey JSON differs between identical runs");
    std::string t1 = construction_json(construct_tangency_stratum({0, 1}, n, seed)).dump();
    std::string t2 = construction_json(construct_tangency_stratum({0, 1}, n, seed)).dump();
    c.check(t1 == t2, "tangency certificate differs between identical seeds");
    std::string m1 = construction_json(construct_max_weight(1, 2, n, seed)).dump();
    std::string m2 = construction_json(construct_max_weight(1, 2, n, seed)).dump();
    c.check(m1 == m2, "full-contact certificate differs between identical seeds");
    c.r.certificate["csv"] = survey_csv(s1);
  });
}

VerifyReport run_verify(int n_min, int n_max, std::uint64_t seed) {
  if (n_min < 2 || n_min > n_max)
    throw std::invalid_argument("verification range must satisfy 2 <= n_min <= n_max");
  VerifyReport rep;
  for (int n = n_min; n <= n_max; ++n) {
    std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(n));
    rep.suites.push_back(suite_weight_bound(n, 200, 100, derive_seed(s, 1)));
    rep.suites.push_back(suite_ramification_count(n, 40, 100, derive_seed(s, 2)));
    rep.suites.push_back(suite_discriminant_order(n, 20, 100, derive_seed(s, 3)));
    rep.suites.push_back(suite_spectral_dichotomy(n, 40, 100, derive_seed(s, 4)));
    rep.suites.push_back(suite_genus_cross_check(n, 20, 100, derive_seed(s, 5)));
    rep.suites.push_back(suite_interpolation(n, 40, derive_seed(s, 6)));
    rep.suites.push_back(suite_strata(n, derive_seed(s, 7)));
    rep.suites.push_back(suite_genericity(n, 60, 100, derive_seed(s, 8)));
  }
  if (n_min <= 2 && 2 <= n_max)
    rep.suites.push_back(suite_weight_tuples(200, derive_seed(seed, 0x5754ull)));
  rep.suites.push_back(suite_betti_utility());
  rep.suites.push_back(suite_determinism(n_min, derive_seed(seed, 0x4454ull)));
  rep.all_passed = std::all_of(rep.suites.begin(), rep.suites.end(),
                               [](const SuiteResult& s) { return s.passed; });
  return rep;
}

json suite_json(const SuiteResult& s) {
  json j;
  j["name"] = s.name;
  j["passed"] = s.passed;
  j["checks"] = s.checks;
  if (!s.detail.empty()) j["detail"] = s.detail;
  j["certificate"] = s.certificate;
  return j;
}

json verify_json(const VerifyReport& r) {
  json j;
  j["all_passed"] = r.all_passed;
  json suites = json::array();
  for (const auto& s : r.suites) suites.push_back(suite_json(s));
  j["suites"] = suites;
  return j;
}

}  // namespace hopf

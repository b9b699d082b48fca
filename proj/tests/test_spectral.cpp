#include <doctest.h>

#include <stdexcept>

#include "hopf/spectral.hpp"

#include "form_util.hpp"

using namespace hopf;
using hopf_test::bform;
using hopf_test::pp;

TEST_SUITE("spectral covers") {
  TEST_CASE("transversal curve gives a smooth cover") {
    SpectralData s = spectral_invariants(GraphCurve(2, bform(2, {0, 1, 0}), bform(2, {1, 0, 1})));
    CHECK(s.n == 2);
    CHECK(s.branch_degree == 8);
    CHECK(s.smooth);
    CHECK(s.irreducible);
    CHECK(s.singular_points.empty());
    CHECK(s.arithmetic_genus == 3);
    CHECK(s.geometric_genus == 3);
    for (const Profile& p : s.branch_profiles) CHECK(p == Profile({1, 1}));
    CHECK(genus_parity_check(s));  // 8 odd branch points: 8/2 - 1 = 3
  }

  TEST_CASE("one double branch point gives a node") {
    SpectralData s = spectral_invariants(GraphCurve(2, bform(2, {0, 0, 1}), bform(2, {1, 1, 0})));
    CHECK(s.branch_profiles[0] == Profile({2}));
    CHECK(s.branch_profiles[1] == Profile({1, 1}));
    CHECK_FALSE(s.smooth);
    REQUIRE(s.singular_points.size() == 1);
    const SingularPoint& node = s.singular_points[0];
    CHECK(node.theta_index == 0);
    REQUIRE(node.point.has_value());
    CHECK(*node.point == pp(0, 1));
    CHECK(node.factor == bform(1, {0, 1}));  // s
    CHECK(node.multiplicity == 2);
    CHECK(node.count == 1);
    CHECK(node.delta() == 1);
    CHECK(node.local_type() == "A1");
    CHECK(s.arithmetic_genus == 3);
    CHECK(s.geometric_genus == 2);
    CHECK(genus_parity_check(s));  // 6 odd branch points: 6/2 - 1 = 2
  }

  TEST_CASE("two nodes drop the genus twice") {
    SpectralData s = spectral_invariants(GraphCurve(2, bform(2, {0, 0, 1}), bform(2, {1, 0, 0})));
    REQUIRE(s.singular_points.size() == 2);
    CHECK(s.singular_points[0].theta_index == 0);
    CHECK(*s.singular_points[0].point == pp(0, 1));
    CHECK(s.singular_points[1].theta_index == 1);
    CHECK(*s.singular_points[1].point == pp(1, 0));
    CHECK(s.geometric_genus == 1);
    CHECK(genus_parity_check(s));  // 4 odd branch points: 4/2 - 1 = 1
  }

  TEST_CASE("conjugate singular points enter as one entry") {
    // P = (s^2 - 2t^2)^2, Q = t^4: an irrational double pair and a full-contact point
    GraphCurve d(4, bform(4, {4, 0, -4, 0, 1}), bform(4, {1, 0, 0, 0, 0}));
    REQUIRE(d.smooth());
    SpectralData s = spectral_invariants(d);
    CHECK(s.branch_profiles[0] == Profile({2, 2}));
    CHECK(s.branch_profiles[1] == Profile({4}));
    CHECK(s.branch_profiles[2] == Profile({1, 1, 1, 1}));
    CHECK(s.branch_profiles[3] == Profile({1, 1, 1, 1}));
    CHECK(s.branch_degree == 16);

    REQUIRE(s.singular_points.size() == 2);
    const SingularPoint& pair = s.singular_points[0];
    CHECK(pair.theta_index == 0);
    CHECK_FALSE(pair.point.has_value());
    CHECK(pair.factor == bform(2, {-2, 0, 1}));  // s^2 - 2t^2
    CHECK(pair.multiplicity == 2);
    CHECK(pair.count == 2);
    CHECK(pair.local_type() == "A1");

    const SingularPoint& deep = s.singular_points[1];
    CHECK(deep.theta_index == 1);
    REQUIRE(deep.point.has_value());
    CHECK(*deep.point == pp(1, 0));
    CHECK(deep.factor == bform(1, {1, 0}));  // t
    CHECK(deep.multiplicity == 4);
    CHECK(deep.count == 1);
    CHECK(deep.delta() == 2);
    CHECK(deep.local_type() == "A3");

    CHECK(s.arithmetic_genus == 7);
    CHECK(s.geometric_genus == 3);  // delta total 2*1 + 2 = 4
    CHECK(genus_parity_check(s));   // 8 odd branch points: 8/2 - 1 = 3
  }

  TEST_CASE("vertical components are rejected") {
    GraphCurve bad(2, bform(2, {0, 1, 0}), bform(2, {0, 1, 1}));  // common factor s
    CHECK_THROWS_AS(spectral_invariants(bad), std::domain_error);
  }

  TEST_CASE("parity check rejects an odd branch count") {
    // No curve produces this: four profiles of equal degree always contribute
    // an even number of odd multiplicities.  Forged data must be caught.
    SpectralData forged{
        2,
        {Profile({2}), Profile({1, 1, 1}), Profile({1, 1}), Profile({1, 1})},
        9,
        {},
        3,
        2,
        false,
        true,
    };
    CHECK_THROWS_AS(genus_parity_check(forged), std::domain_error);
  }
}

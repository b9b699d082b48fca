#include <doctest.h>

#include <stdexcept>

#include "hopf/graph.hpp"

#include "form_util.hpp"

using namespace hopf;
using hopf_test::bform;
using hopf_test::pp;
using hopf_test::rat;

namespace {

const BinaryForm kSt = bform(2, {0, 1, 0});
const BinaryForm kS2pT2 = bform(2, {1, 0, 1});

}  // namespace

TEST_SUITE("profiles") {
  TEST_CASE("canonical ordering and invariants") {
    Profile p({1, 2, 1});
    CHECK(p.multiplicities() == std::vector<int>{2, 1, 1});
    CHECK(p.reduced() == std::vector<int>{2});
    CHECK(p.length() == 1);
    CHECK(p.sum() == 4);
    CHECK(p.weight() == 1);
    CHECK(Profile({1, 1}).weight() == 0);
    CHECK(Profile({3, 2}).weight() == 3);
    CHECK_THROWS_AS(Profile({0, 2}), std::invalid_argument);
  }

  TEST_CASE("order-free view") {
    CHECK(Profile({2, 1, 1}).as_multiset() == Profile({1, 2, 1}).as_multiset());
  }
}

TEST_SUITE("theta configurations") {
  TEST_CASE("standard points") {
    const ThetaConfig& t = standard_thetas();
    CHECK(t.theta(0) == pp(1, 0));
    CHECK(t.theta(1) == pp(0, 1));
    CHECK(t.theta(2) == pp(1, 1));
    CHECK(t.theta(3) == pp(1, -1));
  }

  TEST_CASE("distinctness is enforced") {
    CHECK_THROWS_AS(ThetaConfig({pp(1, 0), pp(1, 0), pp(1, 1), pp(1, -1)}),
                    std::invalid_argument);
  }
}

TEST_SUITE("graph curves") {
  TEST_CASE("smoothness is the resultant") {
    GraphCurve d(2, kSt, kS2pT2);
    CHECK(d.smooth());
    CHECK(is_smooth(d));
    CHECK(d.resultant() == rat(1));
    // common factor s: a vertical component
    GraphCurve v(2, kSt, bform(2, {0, 1, 1}));  // st, s^2 + st
    CHECK_FALSE(v.smooth());
    CHECK(v.resultant().is_zero());
  }

  TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(GraphCurve(0, bform(0, {1}), bform(0, {2})), std::invalid_argument);
    CHECK_THROWS_AS(GraphCurve(2, bform(1, {1, 1}), kSt), std::invalid_argument);
    CHECK_THROWS_AS(GraphCurve(2, BinaryForm(2), BinaryForm(2)), std::invalid_argument);
  }

  TEST_CASE("fiber forms over the second factor") {
    GraphCurve d(2, kSt, kS2pT2);
    CHECK(fiber_form(d, pp(1, 0)) == kSt);
    CHECK(fiber_form(d, pp(0, 1)) == kS2pT2);
    CHECK(fiber_form(d, pp(1, 1)) == bform(2, {1, 1, 1}));
    // P and Q proportional: the line over [2:-1] lies on the curve
    GraphCurve w(2, kSt, bform(2, {0, 2, 0}));
    CHECK_THROWS_AS(fiber_form(w, pp(2, -1)), std::domain_error);
  }

  TEST_CASE("profiles of a transversal curve") {
    GraphCurve d(2, kSt, kS2pT2);
    CHECK(profile(d, pp(1, 0)) == Profile({1, 1}));
    CHECK(profile(d, pp(0, 1)) == Profile({1, 1}));
    CHECK(profile(d, pp(1, 1)) == Profile({1, 1}));
    CHECK(profile(d, pp(1, -1)) == Profile({1, 1}));
    Classification c = classify(d);
    CHECK(c.kind == Kind::regular);
    CHECK(c.total == 0);
    CHECK(kind_name(c.kind) == "regular");
  }

  TEST_CASE("a tangent line makes the curve irregular") {
    GraphCurve d(2, bform(2, {0, 0, 1}), bform(2, {1, 1, 0}));  // s^2, st + t^2
    CHECK(d.smooth());
    CHECK(profile(d, pp(1, 0)) == Profile({2}));
    CHECK(profile(d, pp(0, 1)) == Profile({1, 1}));
    Classification c = classify(d);
    CHECK(c.kind == Kind::irregular);
    CHECK(c.weights == std::array<int, 4>{1, 0, 0, 0});
    CHECK(c.total == 1);
    CHECK(kind_name(c.kind) == "irregular");
  }

  TEST_CASE("two full-contact lines at n = 2") {
    GraphCurve d(2, bform(2, {0, 0, 1}), bform(2, {1, 0, 0}));  // s^2, t^2
    CHECK(d.smooth());
    CHECK(profile(d, pp(1, 0)) == Profile({2}));
    CHECK(profile(d, pp(0, 1)) == Profile({2}));
    CHECK(profile(d, pp(1, 1)) == Profile({1, 1}));
    CHECK(profile(d, pp(1, -1)) == Profile({1, 1}));
    Classification c = classify(d);
    CHECK(c.total == 2);  // the bound 2n-2
  }

  TEST_CASE("mixed profile at n = 3") {
    GraphCurve d(3, bform(3, {0, 0, 1, 0}), bform(3, {1, 0, 0, 1}));  // s^2 t, s^3 + t^3
    CHECK(d.smooth());
    CHECK(profile(d, pp(1, 0)) == Profile({2, 1}));
    CHECK(profile(d, pp(1, 0)).weight() == 1);
  }
}

TEST_SUITE("ramification") {
  TEST_CASE("jacobian of the transversal example") {
    GraphCurve d(2, kSt, kS2pT2);
    BinaryForm j = ramification_divisor(d);
    CHECK(j.degree() == 2);
    CHECK(j == bform(2, {2, 0, -2}));  // 2t^2 - 2s^2
    CHECK(root_multiplicity_at(j, pp(1, 1)) == 1);
    CHECK(root_multiplicity_at(j, pp(1, -1)) == 1);
  }

  TEST_CASE("pencil discriminant matches the hand computation") {
    GraphCurve d(2, kSt, kS2pT2);
    BinaryForm delta = pencil_discriminant(d);
    CHECK(delta == bform(2, {4, 0, -1}));  // 4 a1^2 - a0^2
    CHECK(root_multiplicity_at(delta, pp(2, 1)) == 1);
    CHECK(root_multiplicity_at(delta, pp(2, -1)) == 1);
    CHECK(root_multiplicity_at(delta, pp(1, 0)) == 0);
  }

  TEST_CASE("discriminant degree and order at a tangent theta") {
    GraphCurve d(2, bform(2, {0, 0, 1}), bform(2, {1, 1, 0}));
    BinaryForm delta = pencil_discriminant(d);
    CHECK(delta.degree() == 2);
    CHECK(root_multiplicity_at(delta, pp(1, 0)) == 1);  // weight 1 fiber
  }

  TEST_CASE("degenerate pencils are rejected") {
    CHECK_THROWS_AS(pencil_discriminant(GraphCurve(1, bform(1, {0, 1}), bform(1, {1, 0}))),
                    std::invalid_argument);
    GraphCurve prop(2, bform(2, {0, 0, 1}), bform(2, {0, 0, 2}));  // s^2, 2s^2
    CHECK_THROWS_AS(pencil_discriminant(prop), std::domain_error);
  }

  TEST_CASE("full report on the transversal example") {
    RamificationReport r = ramification_report(GraphCurve(2, kSt, kS2pT2));
    CHECK(r.jacobian_degree == 2);
    CHECK(r.jacobian_squarefree);
    CHECK(r.discriminant_squarefree);
    CHECK(r.theta_weights == std::array<int, 4>{0, 0, 0, 0});
    CHECK(r.total_weight == 0);
    CHECK(r.rh_identity);
  }

  TEST_CASE("full report sees the tangency") {
    RamificationReport r =
        ramification_report(GraphCurve(2, bform(2, {0, 0, 1}), bform(2, {1, 1, 0})));
    CHECK(r.theta_weights == std::array<int, 4>{1, 0, 0, 0});
    CHECK(r.total_weight == 1);
    CHECK(r.rh_identity);
  }
}

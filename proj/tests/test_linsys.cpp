#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hopf/linsys.hpp"

#include "form_util.hpp"

using namespace hopf;
using hopf_test::bform;
using hopf_test::pp;
using hopf_test::rat;

namespace {

/// M v == 0 with v the stacked coefficients (p_0..p_n, q_0..q_n) of d.
bool satisfies(const QMatrix& m, const GraphCurve& d) {
  const int n = d.n();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc(0);
    for (int k = 0; k <= n; ++k) {
      acc += m.at(i, static_cast<std::size_t>(k)) * d.P().coeff(k);
      acc += m.at(i, static_cast<std::size_t>(n + 1 + k)) * d.Q().coeff(k);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("fat point schemes") {
  TEST_CASE("validation") {
    CHECK_THROWS_AS(FatPointScheme({{4, pp(1, 1), 1}}), std::invalid_argument);
    CHECK_THROWS_AS(FatPointScheme({{0, pp(1, 1), 0}}), std::invalid_argument);
    CHECK_THROWS_AS(FatPointScheme({{0, pp(1, 1), 1}, {0, pp(2, 2), 2}}),
                    std::invalid_argument);  // same point twice
    FatPointScheme z({{0, pp(1, 1), 2}, {2, pp(1, 1), 1}, {0, pp(1, 0), 3}});
    CHECK(z.degree() == 6);
    CHECK(z.mentioned_thetas() == std::vector<int>{0, 2});
  }
}

TEST_SUITE("condition matrices") {
  TEST_CASE("double point on the first line") {
    // theta_1 = [1:0] cuts the P block only; x = [0:1] kills p_0 then p_1
    ConditionMatrix cm = condition_matrix(FatPointScheme({{0, pp(0, 1), 2}}), 2);
    REQUIRE(cm.matrix().rows() == 2);
    REQUIRE(cm.matrix().cols() == 6);
    CHECK(cm.rank() == 2);
    CHECK(cm.matrix().at(0, 0) == rat(1));
    CHECK(cm.matrix().at(1, 1) == rat(1));
    for (std::size_t j = 0; j < 6; ++j) {
      if (j != 0) CHECK(cm.matrix().at(0, j).is_zero());
      if (j != 1) CHECK(cm.matrix().at(1, j).is_zero());
    }
    CHECK(h0(FatPointScheme({{0, pp(0, 1), 2}}), 2) == 4);
  }

  TEST_CASE("reciprocal chart at [1:0]") {
    ConditionMatrix cm = condition_matrix(FatPointScheme({{0, pp(1, 0), 2}}), 2);
    CHECK(cm.rank() == 2);
    CHECK(cm.matrix().at(0, 2) == rat(1));  // kills p_2
    CHECK(cm.matrix().at(1, 1) == rat(1));  // then p_1
    CHECK(cm.matrix().at(0, 5).is_zero());
  }

  TEST_CASE("generic point fills both blocks") {
    // theta_3 = [1:1], x = [2:1]: value row (1,2,4), derivative row (0,1,4)
    ConditionMatrix cm = condition_matrix(FatPointScheme({{2, pp(2, 1), 2}}), 2);
    const QMatrix& m = cm.matrix();
    CHECK(m.at(0, 0) == rat(1));
    CHECK(m.at(0, 1) == rat(2));
    CHECK(m.at(0, 2) == rat(4));
    CHECK(m.at(0, 3) == rat(1));
    CHECK(m.at(0, 4) == rat(2));
    CHECK(m.at(0, 5) == rat(4));
    CHECK(m.at(1, 0).is_zero());
    CHECK(m.at(1, 1) == rat(1));
    CHECK(m.at(1, 2) == rat(4));
    CHECK(m.at(1, 4) == rat(1));
    CHECK(m.at(1, 5) == rat(4));
    CHECK(cm.rank() == 2);
  }

  TEST_CASE("single-line schemes impose independent conditions") {
    CHECK(h0(FatPointScheme({{0, pp(1, 1), 3}}), 3) == 5);
    CHECK(h0(FatPointScheme({{1, pp(2, 1), 2}, {1, pp(0, 1), 1}}), 3) == 5);
    // an extra simple point on another line adds one more condition
    CHECK(h0(FatPointScheme({{0, pp(1, 1), 3}, {3, pp(2, 1), 1}}), 3) == 4);
  }

  TEST_CASE("multiplicity cap") {
    CHECK_THROWS_AS(condition_matrix(FatPointScheme({{0, pp(1, 1), 4}}), 2),
                    std::invalid_argument);
    CHECK_NOTHROW(condition_matrix(FatPointScheme({{0, pp(1, 1), 3}}), 2));
    CHECK_THROWS_AS(condition_matrix(FatPointScheme(), 0), std::invalid_argument);
  }
}

TEST_SUITE("kernel bases") {
  TEST_CASE("no conditions leaves the whole space") {
    CHECK(h0(FatPointScheme(), 1) == 4);
    CHECK(kernel_basis(FatPointScheme(), 1).size() == 4);
  }

  TEST_CASE("basis members satisfy the conditions") {
    FatPointScheme z({{2, pp(2, 1), 2}, {1, pp(1, 0), 1}});
    ConditionMatrix cm = condition_matrix(z, 2);
    std::vector<GraphCurve> basis = kernel_basis(z, 2);
    CHECK(basis.size() == 6 - cm.rank());
    for (const GraphCurve& b : basis) CHECK(satisfies(cm.matrix(), b));
  }

  TEST_CASE("saturated scheme leaves nothing") {
    FatPointScheme z({{0, pp(0, 1), 3}, {1, pp(1, 1), 3}});
    CHECK(h0(z, 2) == 0);
    CHECK_THROWS_AS(kernel_basis(z, 2), std::domain_error);
  }
}

TEST_SUITE("general members") {
  TEST_CASE("tangent point is hit exactly") {
    FatPointScheme z({{0, pp(3, 1), 2}});
    GraphCurve d = general_member(z, 2, 99);
    CHECK(d.smooth());
    CHECK(root_multiplicity_at(fiber_form(d, pp(1, 0)), pp(3, 1)) == 2);
    Classification c = classify(d);
    CHECK(c.weights == std::array<int, 4>{1, 0, 0, 0});
    CHECK(c.kind == Kind::irregular);
  }

  TEST_CASE("empty scheme gives a transversal curve") {
    GraphCurve d = general_member(FatPointScheme(), 2, 7);
    CHECK(d.smooth());
    CHECK(classify(d).kind == Kind::regular);
  }

  TEST_CASE("deterministic in the seed") {
    FatPointScheme z({{1, pp(0, 1), 2}});
    GraphCurve a = general_member(z, 3, 12345);
    GraphCurve b = general_member(z, 3, 12345);
    CHECK(a.P() == b.P());
    CHECK(a.Q() == b.Q());
  }
}

TEST_SUITE("stratum constructors") {
  TEST_CASE("single tangency") {
    ConstructionResult r = construct_tangency_stratum({2}, 2, 4);
    CHECK(r.classification.weights == std::array<int, 4>{0, 0, 1, 0});
    CHECK(r.certificate.deg_z == 2);
    CHECK(r.certificate.rank == 2);
    CHECK(r.certificate.h0 == 4);
    CHECK(r.free_points == 1);
    CHECK(r.codimension == 1);
    CHECK(r.seed == 4);
  }

  TEST_CASE("tangency pair") {
    ConstructionResult r = construct_tangency_stratum({0, 1}, 2, 11);
    CHECK(r.curve.smooth());
    CHECK(r.classification.weights == std::array<int, 4>{1, 1, 0, 0});
    CHECK(r.classification.total == 2);
    CHECK(r.certificate.rank == 4);
    CHECK(r.codimension == 2);
  }

  TEST_CASE("tangency triple needs room") {
    ConstructionResult r = construct_tangency_stratum({0, 1, 3}, 4, 5);
    CHECK(r.classification.weights == std::array<int, 4>{1, 1, 0, 1});
    CHECK(r.codimension == 3);
    CHECK_THROWS_AS(construct_tangency_stratum({0, 1, 2}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_tangency_stratum({0}, 1, 1), std::invalid_argument);
  }

  TEST_CASE("tangency pattern validation") {
    CHECK_THROWS_AS(construct_tangency_stratum({}, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_tangency_stratum({0, 1, 2, 3}, 8, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_tangency_stratum({5}, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_tangency_stratum({1, 1}, 4, 1), std::invalid_argument);
  }

  TEST_CASE("maximal weight pencil") {
    ConstructionResult r = construct_max_weight(0, 1, 5, 21);
    CHECK(r.curve.smooth());
    CHECK(r.classification.weights == std::array<int, 4>{4, 4, 0, 0});
    CHECK(r.classification.total == 8);  // the bound 2n-2 at n = 5
    CHECK(profile(r.curve, pp(1, 0)) == Profile({5}));
    CHECK(profile(r.curve, pp(0, 1)) == Profile({5}));
    CHECK(r.certificate.deg_z == 10);
    CHECK(r.certificate.rank == 10);
    CHECK(r.certificate.h0 == 2);
    CHECK(r.codimension == 8);
  }

  TEST_CASE("maximal weight validation") {
    CHECK_THROWS_AS(construct_max_weight(1, 1, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_max_weight(-1, 2, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_max_weight(0, 1, 1, 1), std::invalid_argument);
  }

  TEST_CASE("prescribed profile") {
    ConstructionResult r = construct_profile_stratum(1, {2, 2}, 4, 31);
    CHECK(profile(r.curve, pp(0, 1)).reduced() == std::vector<int>{2, 2});
    CHECK(r.classification.weights == std::array<int, 4>{0, 2, 0, 0});
    CHECK(r.certificate.rank == 4);
    CHECK(r.free_points == 2);
    CHECK(r.codimension == 2);
  }

  TEST_CASE("simple marked points cost nothing") {
    ConstructionResult r = construct_profile_stratum(0, {1}, 2, 8);
    CHECK(r.classification.kind == Kind::regular);
    CHECK(r.certificate.rank == 1);
    CHECK(r.codimension == 0);
  }

  TEST_CASE("profile validation") {
    CHECK_THROWS_AS(construct_profile_stratum(0, {3}, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_profile_stratum(0, {}, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_profile_stratum(0, {2, 0}, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_profile_stratum(6, {2}, 4, 1), std::invalid_argument);
  }
}

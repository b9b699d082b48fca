#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hopf/survey.hpp"

using namespace hopf;

TEST_SUITE("surveys") {
  TEST_CASE("counts are consistent") {
    SurveyStats s = run_survey(2, 60, 50, 7);
    CHECK(s.n == 2);
    CHECK(s.samples == 60);
    CHECK(s.coefficient_bound == 50);
    CHECK(s.seed == 7);
    CHECK(s.smooth <= s.samples);
    CHECK(s.smooth > 0);  // non-smooth curves form a hypersurface; 60 misses are absurd
    CHECK(s.regular + s.irregular == s.smooth);
    CHECK(s.rh_identity_ok == s.smooth);  // the identity is exact, not statistical
    CHECK(s.ordinary_ramification <= s.smooth);
    CHECK(s.distinct_branch_images <= s.smooth);
  }

  TEST_CASE("deterministic in the seed") {
    SurveyStats a = run_survey(3, 40, 30, 99);
    SurveyStats b = run_survey(3, 40, 30, 99);
    CHECK(survey_csv(a) == survey_csv(b));
    SurveyStats c = run_survey(3, 40, 30, 100);
    CHECK(survey_csv(a) != survey_csv(c));  // seed participates in the stream
  }

  TEST_CASE("csv shape") {
    SurveyStats s = run_survey(2, 5, 10, 1);
    const std::string csv = survey_csv(s);
    std::istringstream is(csv);
    std::string header, row, extra;
    REQUIRE(std::getline(is, header));
    REQUIRE(std::getline(is, row));
    CHECK_FALSE(std::getline(is, extra));
    CHECK(header ==
          "n,samples,bound,seed,smooth,regular,irregular,ordinary_ram,distinct_images,rh_ok");
    CHECK(csv.back() == '\n');
    CHECK(row.substr(0, 9) == "2,5,10,1,");
    CHECK(std::count(row.begin(), row.end(), ',') == 9);
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(run_survey(1, 10, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_survey(2, 0, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_survey(2, 10, 0, 0), std::invalid_argument);
  }
}

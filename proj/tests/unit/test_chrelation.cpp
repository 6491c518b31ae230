#include "tangenttab/chrelation.hpp"
#include "tangenttab/errors.hpp"
#include "tangenttab/tangency.hpp"

#include <doctest.h>

using namespace tangenttab;

TEST_CASE("profile literal") {
  auto p = parse_profile("d=2 delta=3 alpha=[0,2] beta=[2]");
  CHECK(p.d == 2);
  CHECK(p.delta == 3);
  CHECK(p.alpha[2] == 2);
  CHECK(p.beta[1] == 2);
  CHECK(p.is_valid());
  CHECK(parse_profile("beta=[3] d=1") == cubic_profile(1, 0, 0, 0));
  CHECK_THROWS_AS(parse_profile("delta=3 beta=[3]"), ParseError);
  CHECK_THROWS_AS(parse_profile("d=1 beta=[2]"), ParseError);
  CHECK_THROWS_AS(parse_profile("d=2 alpha=[0,2] beta=[1,1]"), ParseError);
  CHECK_THROWS_AS(parse_profile("d=1 beta=[3] colour=red"), ParseError);
}

TEST_CASE("dimension and free points") {
  CHECK(expected_dimension(3, 2, 6) == 5);
  CHECK(expected_dimension(4, 1, 4) == 2);
  CHECK_THROWS_AS(expected_dimension(2, 1, 2), RangeError);
  CHECK(free_points(cubic_profile(2, 0, 0, 1)) == 4);
  CHECK(free_points(cubic_profile(3, 8, 0, 0)) == 0);
}

TEST_CASE("single expansion") {
  auto p = parse_profile("d=1 beta=[1,1]");
  auto e = expand_once(p);
  CHECK(e.size() == 2);
  CHECK(e.coefficient(parse_profile("d=1 alpha=[1] beta=[0,1]")) == 1);
  CHECK(e.coefficient(parse_profile("d=1 alpha=[0,1] beta=[1]")) == 2);
  CHECK_THROWS_AS(expand_once(cubic_profile(3, 8, 0, 0)), NotReducible);
}

TEST_CASE("reduction bookkeeping") {
  auto p = parse_profile("d=2 beta=[4,1]");
  const auto terminal = reduce_to_terminal(p);
  for (const auto& [t, coeff] : terminal.terms()) {
    CHECK(t.alpha.weight() + t.beta.weight() == 6);
    CHECK(free_points(t) <= 0);
    CHECK(coeff > 0);
  }
}

TEST_CASE("lines through a general point tangent to the cubic") {
  KCoefficientEngine engine;
  TangencyCounter counter(engine);
  auto p = parse_profile("d=1 beta=[3]");
  CHECK(evaluate_combination(reduce_to_terminal(p), counter) == 1);
  CHECK(evaluate_combination(reduce_to_terminal(cubic_profile(2, 0, 0, 1)), counter) == 12);
}

TEST_CASE("reduction agrees with the closed form for d <= 2") {
  KCoefficientEngine engine;
  TangencyCounter counter(engine);
  ProfileReducer reducer;
  for (int d = 1; d <= 2; ++d)
    for (const auto& t : valid_problems(d)) {
      auto p = cubic_profile(d, t.a, t.b, t.c);
      CHECK(evaluate_combination(reducer.reduce(p), counter) == counter.count(t));
    }
}

TEST_CASE("evaluation errors") {
  KCoefficientEngine engine;
  TangencyCounter counter(engine);
  CHECK_THROWS_AS(evaluate_cubic_profile(parse_profile("d=1 beta=[0,0,1]"), counter), UnsupportedOrder);
  CHECK_THROWS_AS(evaluate_cubic_profile(parse_profile("d=1 delta=4 beta=[4]"), counter), NotEvaluable);
  auto general = reduce_to_terminal(parse_profile("d=1 delta=4 beta=[2,1]"));
  CHECK_FALSE(general.empty());
}

TEST_CASE("hypothesis readings") {
  CHECK_FALSE(hypothesis_readings_disagree(cubic_profile(2, 0, 0, 1)));
  CHECK(hypothesis_readings_disagree(parse_profile("d=2 alpha=[0,2] beta=[2]")));
}

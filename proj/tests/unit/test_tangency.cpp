#include "tangenttab/errors.hpp"
#include "tangenttab/tangency.hpp"

#include <doctest.h>

#include <sstream>

using namespace tangenttab;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

}  // namespace

TEST_CASE("validity and free points") {
  CHECK(TangencyProblem{2, 0, 0, 1}.is_valid());
  CHECK(TangencyProblem{2, 0, 0, 1}.free_points() == 4);
  CHECK_FALSE(TangencyProblem{1, 3, 0, 0}.is_valid());
  CHECK_FALSE(TangencyProblem{1, 0, 0, 2}.is_valid());
  CHECK(TangencyProblem{2, 0, 2, 1}.label() == "N_2(0,2,1)");
}

TEST_CASE("counts") {
  KCoefficientEngine engine;
  TangencyCounter counter(engine);
  CHECK(counter.count(1, 0, 0, 1) == 6);
  CHECK(counter.count(1, 1, 0, 1) == 4);
  CHECK(counter.count(2, 0, 2, 1) == 3);
  CHECK(counter.count(2, 0, 0, 1) == 12);
  CHECK(counter.count(3, 8, 0, 0) == 12);
  CHECK(counter.count(1, 3, 0, 0) == 0);
  CHECK(counter.count(2, 0, 1, 2) == 6);
  CHECK(counter.count(2, 0, 0, 3) == 12);
  CHECK(counter.count(2, 2, 1, 1) == 4);
  CHECK(counter.count(2, 1, 2, 0) == 1);
  CHECK_THROWS_AS(counter.count(3, 0, 1, 0), UnknownNormalization);
}

TEST_CASE("P and Q values") {
  KCoefficientEngine engine;
  TangencyCounter counter(engine);
  CHECK(counter.p_value(2, 0, 1, 4) == 12);
  CHECK(counter.p_value(2, 0, 1, -1) == 0);
  CHECK(counter.p_value(1, 0, 0, 2) == 1);
  CHECK(counter.q_coefficients(2, 2, 1) == std::pair{q(3, 2), q(3)});
  CHECK(counter.q_coefficients(1, 0, 1) == std::pair{q(2), q(4)});
  CHECK(counter.q_coefficients(3, 0, 0) == std::pair{q(12), q(24)});
}

TEST_CASE("Gromov-Witten invariants") {
  KCoefficientEngine engine;
  TangencyCounter counter(engine);
  CHECK(counter.gw_invariant(1, 2, 0) == 1);
  CHECK(counter.gw_invariant(1, 0, 1) == 6);
  CHECK(counter.gw_invariant(2, 0, 1) == 288);
  CHECK_THROWS_AS(counter.gw_invariant(1, 4, 0), RangeError);
}

TEST_CASE("identity suites are green with shipped data") {
  KCoefficientEngine engine;
  TangencyCounter counter(engine);
  for (auto report : {verify_ch_identity(counter, 5), verify_key_relation(counter, 5), verify_delta(counter, 5),
                      verify_polynomial(counter, 4), verify_integrality(counter, 5)}) {
    INFO(report.suite);
    CHECK(report.ok());
    CHECK(report.passed() > 0);
  }
}

TEST_CASE("d <= 2 is fully covered") {
  KCoefficientEngine engine;
  TangencyCounter counter(engine);
  auto report = verify_ch_identity(counter, 2);
  CHECK(report.ok());
  CHECK(report.skipped() == 0);
}

TEST_CASE("a bad override is caught by the integrality sweep") {
  std::istringstream in("2 1 1/3\n");
  KCoefficientEngine engine(NormalizationTable::shipped(), KTable::parse(in));
  TangencyCounter counter(engine);
  CHECK_FALSE(verify_integrality(counter, 2).ok());
}

TEST_CASE("valid problem enumeration") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& p : valid_problems(d)) {
      CHECK(p.d == d);
      CHECK(p.is_valid());
    }
  CHECK(valid_problems(1).size() > 0);
}

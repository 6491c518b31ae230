#include "tangenttab/combinatorics.hpp"
#include "tangenttab/errors.hpp"

#include <doctest.h>

using namespace tangenttab;

TEST_CASE("binomial boundaries") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(4, 5) == 0);
  CHECK(binom(-3, 0) == 0);
  CHECK(binom(50, 25) == Integer("126410606437752"));
}

TEST_CASE("pascal identity") {
  for (long n = 1; n <= 50; ++n)
    for (long k = -5; k <= 50; ++k) CHECK(binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1));
}

TEST_CASE("forward difference of C(t, c)") {
  for (long c = 1; c <= 8; ++c)
    for (long t = 0; t <= 20; ++t) {
      auto f = [c](long s) -> Rational { return Rational(binom(s, c)); };
      CHECK(forward_difference(f, t) == Rational(binom(t, c - 1)));
    }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Integer("2432902008176640000"));
}

TEST_CASE("sequence statistics") {
  IndexSequence a;
  a.set(1, 2);
  a.set(3, 1);
  auto s = seq_stats(a);
  CHECK(s.norm == 3);
  CHECK(s.weight == 5);
  CHECK(s.factorial == 2);
  CHECK(a.to_string() == "[2,0,1]");
  CHECK(a[2] == 0);
  CHECK(a[7] == 0);

  auto empty = seq_stats(IndexSequence{});
  CHECK(empty.norm == 0);
  CHECK(empty.weight == 0);
  CHECK(empty.factorial == 1);
}

TEST_CASE("norm and weight are additive") {
  IndexSequence a, b;
  a.set(1, 3);
  a.set(2, 1);
  b.set(2, 2);
  b.set(4, 1);
  CHECK((a + b).norm() == a.norm() + b.norm());
  CHECK((a + b).weight() == a.weight() + b.weight());
}

TEST_CASE("adding a unit bumps the factorial") {
  IndexSequence a;
  a.set(2, 3);
  for (unsigned k = 1; k <= 3; ++k) {
    auto bumped = a + IndexSequence::unit(k);
    CHECK(bumped.factorial() == a.factorial() * Integer(a[k] + 1));
  }
}

TEST_CASE("difference and trimming") {
  IndexSequence a = IndexSequence::unit(3);
  CHECK((a - IndexSequence::unit(3)).empty());
  CHECK((a - IndexSequence::unit(3)) == IndexSequence{});
  CHECK_THROWS_AS(a - IndexSequence::unit(1), RangeError);
  CHECK_THROWS_AS(IndexSequence::unit(0), RangeError);
  CHECK(a.max_order() == 3);
}

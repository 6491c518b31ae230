#include "tangenttab/errors.hpp"
#include "tangenttab/kontsevich.hpp"

#include <doctest.h>

#include <chrono>
#include <string>
#include <vector>

using namespace tangenttab;

namespace {

const std::vector<std::string> kExpected = {
    "1",
    "1",
    "12",
    "620",
    "87304",
    "26312976",
    "14616808192",
    "13525751027392",
    "19385778269260800",
    "40739017561997799680",
    "120278021410937387514880",
    "482113680618029292368686080",
};

}  // namespace

TEST_CASE("first twelve values") {
  KontsevichTable table;
  for (int d = 1; d <= 12; ++d) CHECK(kontsevich_number(d, table) == Integer(kExpected[d - 1]));
}

TEST_CASE("independent of fill order") {
  KontsevichTable top_down;
  CHECK(kontsevich_number(12, top_down) == Integer(kExpected[11]));
  KontsevichTable bottom_up;
  for (int d = 1; d <= 12; ++d) kontsevich_number(d, bottom_up);
  CHECK(top_down.snapshot() == bottom_up.snapshot());
}

TEST_CASE("table to twelve is fast") {
  auto start = std::chrono::steady_clock::now();
  KontsevichTable table;
  kontsevich_number(12, table);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
}

TEST_CASE("insert is append-only") {
  KontsevichTable table;
  CHECK_FALSE(table.insert(1, 7));
  CHECK(*table.find(1) == 1);
  CHECK_FALSE(table.find(2).has_value());
}

TEST_CASE("degree must be positive") {
  CHECK_THROWS_AS(kontsevich_number(0), RangeError);
  CHECK_THROWS_AS(kontsevich_number(-2), RangeError);
}

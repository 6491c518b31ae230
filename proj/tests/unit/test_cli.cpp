#include "tangenttab/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace tangenttab;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("tangenttab_test_" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("count output") {
  auto r = run({"count", "2", "0", "2", "1"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "N_2(0,2,1) = 3/1 integer=true provenance=closed-form\n");

  r = run({"count", "1", "0", "0", "1", "--format", "csv"});
  CHECK(r.out == "d,a,b,c,num,den,integer\n1,0,0,1,6,1,true\n");

  r = run({"count", "2", "0", "0", "1", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == "12/1");
  CHECK(j["integer_flag"] == true);
  CHECK(j["d"] == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({"count", "3", "0", "1", "0"}).code == cli::kUnknownNormalization);
  CHECK(run({"kcoeff", "3", "1"}).code == cli::kUnknownNormalization);
  CHECK(run({"count", "two", "0", "0", "0"}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"kcoeff", "2", "4"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("kcoeff reports provenance") {
  CHECK(run({"kcoeff", "2", "3"}).out == "K_2^3 = 3/4 provenance=base-case\n");
  CHECK(run({"kcoeff", "2", "1"}).out == "K_2^1 = 1/1 provenance=recursion\n");
}

TEST_CASE("table is deterministic and never prints floats") {
  auto a = run({"table", "--dmax", "3"});
  auto b = run({"table", "--dmax", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find('.') == std::string::npos);
  CHECK(a.out.rfind("d,a,b,c,num,den,integer\n", 0) == 0);

  auto json = nlohmann::json::parse(run({"table", "--dmax", "2", "--format", "json"}).out);
  CHECK(json.is_array());
  CHECK(json.size() > 10);
}

TEST_CASE("verify suites") {
  CHECK(run({"verify", "--suite", "all", "--dmax", "4"}).code == cli::kSuccess);
  CHECK(run({"verify", "--suite", "nonsense"}).code == cli::kUsageError);
}

TEST_CASE("verify fails on a non-integral override") {
  auto path = temp_file("bad_k.txt");
  std::ofstream(path) << "2 1 1/3\n";
  CHECK(run({"verify", "--suite", "integrality", "--dmax", "2", "--ktable", path.string()}).code ==
        cli::kVerificationFailure);
  std::filesystem::remove(path);
}

TEST_CASE("user tables") {
  auto f = temp_file("f.txt");
  std::ofstream(f) << "# rescaled by 2^d\n1 0 2/1\n1 1 2/1\n2 0 4/1\n2 1 16/1\n2 2 4/1\n";
  CHECK(run({"kcoeff", "2", "1", "--ftable", f.string()}).out == "K_2^1 = 1/1 provenance=recursion\n");
  auto k = temp_file("k.txt");
  std::ofstream(k) << "3 1 5/1\n";
  CHECK(run({"count", "3", "0", "1", "0", "--ktable", k.string()}).code == cli::kSuccess);
  auto missing = run({"count", "1", "0", "0", "1", "--ftable", "/nonexistent/f.txt"});
  CHECK(missing.code == cli::kUsageError);
  std::filesystem::remove(f);
  std::filesystem::remove(k);
}

TEST_CASE("cache round trip and corruption") {
  auto cache = temp_file("cache.txt");
  auto first = run({"table", "--dmax", "3", "--cache", cache.string()});
  REQUIRE(std::filesystem::exists(cache));
  auto contents = cli::read_cache(cache);
  REQUIRE(contents.has_value());
  CHECK(contents->k_values.count({3, 0}) == 1);
  auto second = run({"table", "--dmax", "3", "--cache", cache.string()});
  CHECK(first.out == second.out);

  std::ofstream(cache) << "TANGENTTAB v1\nK 2 1 oops\n";
  CHECK_FALSE(cli::read_cache(cache).has_value());
  CHECK(run({"count", "2", "0", "0", "1", "--cache", cache.string()}).out.find("= 12/1") != std::string::npos);

  // A poisoned value for a different normalization table must not be used.
  std::ofstream(cache) << "TANGENTTAB v1\nF 1 0 1/1\nK 2 0 99/1\n";
  CHECK(run({"kcoeff", "2", "0", "--cache", cache.string()}).out == "K_2^0 = 1/1 provenance=recursion\n");
  std::filesystem::remove(cache);
}

TEST_CASE("reduce command") {
  auto r = run({"reduce", "d=2 delta=3 beta=[4,1]"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("value = 12/1") != std::string::npos);
  CHECK(run({"reduce", "d=2 beta=[4]"}).code == cli::kUsageError);
  CHECK(run({"reduce", "d=1 delta=4 beta=[2,1]"}).code == cli::kSuccess);
}

TEST_CASE("oracle command") {
  auto r = run({"oracle", "tangent-lines", "--trials", "3", "--seed", "9"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("counts={6:3}") != std::string::npos);
  CHECK(run({"oracle", "ellipse"}).code == cli::kUsageError);
}

TEST_CASE("kontsevich command") {
  auto r = run({"kontsevich", "--dmax", "4"});
  CHECK(r.out == "N 1 1\nN 2 1\nN 3 12\nN 4 620\n");
}

#pragma once

#include "tangenttab/kcoeff.hpp"
#include "tangenttab/numeric.hpp"
#include "tangenttab/tangency.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tangenttab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFailure = 2,
  kUnknownNormalization = 3,
  kOracleDegeneracy = 4,
};

/// One computed count, as emitted by `count` and `table`.
struct ResultRecord {
  int d = 0, a = 0, b = 0, c = 0;
  Rational value;
  std::string provenance;  // closed-form | reduction | base-case | oracle

  bool integer_flag() const { return is_integer(value); }
};

std::string csv_header();
std::string to_csv(const ResultRecord& r);
std::string to_json(const ResultRecord& r);
std::string to_json(const std::vector<ResultRecord>& records);
std::string to_text(const ResultRecord& r);

/// Versioned on-disk cache of K values and Kontsevich numbers, stamped with
/// the normalization table it was computed from.
struct CacheContents {
  std::map<DegreeOrder, Rational> normalization;
  std::map<DegreeOrder, Rational> k_values;
  std::map<int, Integer> kontsevich;
};

inline constexpr std::string_view kCacheHeader = "TANGENTTAB v1";

/// nullopt for a missing, unreadable or malformed file.
std::optional<CacheContents> read_cache(const std::filesystem::path& path);
void write_cache(const std::filesystem::path& path, const CacheContents& contents);

/// Suites accepted by `verify --suite`.
std::vector<std::string> verification_suites();

/// Runs one suite against the given tables. `seed` drives the gauge suite.
VerificationReport run_suite(const std::string& suite, int dmax, const KCoefficientEngine& engine,
                             std::uint64_t seed);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tangenttab::cli

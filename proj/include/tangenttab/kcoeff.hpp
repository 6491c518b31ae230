#pragma once

#include "tangenttab/numeric.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string_view>
#include <utility>

namespace tangenttab {

using DegreeOrder = std::pair<int, int>;

enum class NormalizationSource { shipped_default, user_supplied, solved };
std::string_view to_string(NormalizationSource source);

struct NormalizationEntry {
  Rational value;
  NormalizationSource source;
};

/// The coefficients f_d^(b) multiplying K_d^(b) in the K recursion. They are
/// data: the engine never invents an entry. An entry of exactly 0 marks a
/// coefficient whose defining denominator vanishes.
///
/// Only the b = 0 column has an implicit value: a missing f_d^(0) is taken to
/// be (f_1^(0))^d, which reproduces the plain Kontsevich recursion.
class NormalizationTable {
 public:
  /// f_1^(0) = f_1^(1) = f_2^(0) = f_2^(2) = 1, f_2^(1) = 4.
  static NormalizationTable shipped();

  /// Lines `d b num/den`; `#` starts a comment. Throws ParseError.
  static NormalizationTable parse(std::istream& in,
                                  NormalizationSource source = NormalizationSource::user_supplied);
  static NormalizationTable load(const std::filesystem::path& path);

  void set(int d, int b, const Rational& value, NormalizationSource source);
  const NormalizationEntry* find(int d, int b) const;
  std::optional<Rational> value(int d, int b) const;

  /// Every entry multiplied by x^d.
  NormalizationTable rescaled(const Rational& x) const;

  const std::map<DegreeOrder, NormalizationEntry>& entries() const { return entries_; }
  void write(std::ostream& out) const;

  friend bool operator==(const NormalizationTable& a, const NormalizationTable& b);

 private:
  std::map<DegreeOrder, NormalizationEntry> entries_;
};

enum class KSource { base_case, recursion, user_override };
std::string_view to_string(KSource source);

struct KEntry {
  Rational value;
  KSource source;
};

/// Append-only table of K_d^lambda keyed by (d, lambda). Reads and writes are
/// serialized internally so one table can back concurrent evaluations.
class KTable {
 public:
  KTable() = default;
  KTable(const KTable& other);
  KTable& operator=(const KTable& other);

  /// Same line shape as the normalization file: `d lambda num/den`.
  static KTable parse(std::istream& in, KSource source = KSource::user_override);
  static KTable load(const std::filesystem::path& path);

  std::optional<KEntry> find(int d, int lambda) const;
  bool insert(int d, int lambda, KEntry entry);
  std::map<DegreeOrder, KEntry> snapshot() const;
  bool empty() const;

 private:
  mutable std::mutex mutex_;
  std::map<DegreeOrder, KEntry> entries_;
};

/// The rational weight attached to the second sum of the K recursion. Zero when
/// 3*d2 - 1 - b2 = 0 (or d2 = 0).
Rational alpha_factor(int d1, int b1, int d2, int b2);

/// The three K values supplied directly rather than by recursion.
std::optional<Rational> k_base_case(int d, int lambda);

/// Evaluates K_d^lambda from a normalization table and optional overrides,
/// memoizing every intermediate value.
class KCoefficientEngine {
 public:
  explicit KCoefficientEngine(NormalizationTable f = NormalizationTable::shipped(),
                              KTable overrides = {});

  /// Throws RangeError unless d >= 1 and 0 <= 2*lambda <= 3*d,
  /// UnknownNormalization / ZeroNormalization for missing or vanishing f data,
  /// CalibrationMismatch if the result breaks integrality.
  KEntry coefficient(int d, int lambda) const;
  Rational k(int d, int lambda) const { return coefficient(d, lambda).value; }

  /// True iff coefficient(d, lambda) succeeds with the current tables.
  bool computable(int d, int lambda) const;

  /// The right-hand side of the recursion, i.e. K_d^lambda * f_d^lambda.
  Rational recursion_rhs(int d, int lambda) const;

  /// f_d^(b) = rhs / known_k, stored with source `solved`.
  Rational solve_normalization(int d, int b, const Rational& known_k);

  const NormalizationTable& normalization() const { return f_; }
  const KTable& overrides() const { return overrides_; }

  /// Computed (recursion-sourced) entries, for persistence.
  std::map<DegreeOrder, KEntry> cached() const { return cache_.snapshot(); }
  void preload(int d, int lambda, const Rational& value);

 private:
  Rational f_required(int d, int b) const;
  Rational k_or_zero(int d, int b) const;

  NormalizationTable f_;
  KTable overrides_;
  mutable KTable cache_;
};

/// Stateless form of KCoefficientEngine::k.
Rational k_coefficient(int d, int lambda, const NormalizationTable& f, const KTable& overrides = {});

/// Throws CalibrationMismatch unless K is an integer (2*lambda != 3*d) or a
/// quarter-integer (2*lambda == 3*d).
void check_k_integrality(int d, int lambda, const Rational& k);

}  // namespace tangenttab

#pragma once

#include "tangenttab/numeric.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace tangenttab {

/// C(n, k) for 0 <= k <= n, and 0 everywhere else (including n < 0).
Integer binom(long n, long k);

Integer factorial(unsigned long n);

/// Finitely supported sequence of nonnegative counts indexed from 1; entry i
/// is the number of contacts of order i. Trailing zeros are trimmed so that
/// equality and ordering are by value.
class IndexSequence {
 public:
  IndexSequence() = default;
  IndexSequence(std::initializer_list<std::uint64_t> entries);
  explicit IndexSequence(std::vector<std::uint64_t> entries);

  static IndexSequence unit(unsigned order);

  /// Entry of order i (1-based); 0 past the support.
  std::uint64_t operator[](unsigned order) const;
  void set(unsigned order, std::uint64_t count);

  /// Largest order with a nonzero entry; 0 for the empty sequence.
  unsigned max_order() const { return static_cast<unsigned>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  std::uint64_t norm() const;
  std::uint64_t weight() const;
  Integer factorial() const;

  IndexSequence& operator+=(const IndexSequence& other);
  friend IndexSequence operator+(IndexSequence lhs, const IndexSequence& rhs) { return lhs += rhs; }
  /// Componentwise difference; throws RangeError if any entry would go negative.
  friend IndexSequence operator-(const IndexSequence& lhs, const IndexSequence& rhs);

  friend bool operator==(const IndexSequence&, const IndexSequence&) = default;
  friend auto operator<=>(const IndexSequence&, const IndexSequence&) = default;

  const std::vector<std::uint64_t>& entries() const { return entries_; }
  /// `[a,b,c]` form, as used by the profile literal syntax.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::uint64_t> entries_;
};

struct SequenceStats {
  std::uint64_t norm;
  std::uint64_t weight;
  Integer factorial;
};

SequenceStats seq_stats(const IndexSequence& alpha);

/// values(t+1) - values(t).
Rational forward_difference(const std::function<Rational(long)>& values, long t);

}  // namespace tangenttab

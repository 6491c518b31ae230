#pragma once

#include "tangenttab/combinatorics.hpp"
#include "tangenttab/numeric.hpp"

#include <compare>
#include <map>
#include <mutex>
#include <string>
#include <string_view>

namespace tangenttab {

class TangencyCounter;

/// Contact conditions against a smooth plane curve D of degree delta: alpha
/// counts specified contacts by order, beta unspecified ones.
struct ContactProfile {
  int delta = 3;
  int d = 1;
  IndexSequence alpha;
  IndexSequence beta;

  /// delta >= 3, d >= 1 and I(alpha) + I(beta) = d * delta.
  bool is_valid() const;
  /// Number of markings |alpha| + |beta|.
  long markings() const;
  std::string to_string() const;

  friend bool operator==(const ContactProfile&, const ContactProfile&) = default;
  friend auto operator<=>(const ContactProfile&, const ContactProfile&) = default;
};

/// `d=2 delta=3 alpha=[0,2] beta=[1,1]`; keys in any order, delta defaults to 3.
ContactProfile parse_profile(std::string_view literal);

/// The cubic profile ((a,b),(3d-a-2b-2c,c)) behind N_d(a,b,c).
ContactProfile cubic_profile(int d, int a, int b, int c);

/// Integer-weighted formal sum of profiles with no zero coefficients.
class LinearCombination {
 public:
  void add(const ContactProfile& p, const Integer& coefficient);
  LinearCombination& add_scaled(const LinearCombination& other, const Integer& scale);

  const std::map<ContactProfile, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const ContactProfile& p) const;

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  std::map<ContactProfile, Integer> terms_;
};

/// d(3 - delta) + n - 1. Throws RangeError if delta < 3, d < 1 or n < 0.
long expected_dimension(int delta, int d, long n);

/// Expected dimension minus |alpha|.
long free_points(const ContactProfile& p);

/// True when e - I(alpha) and e - |alpha| disagree about positivity, i.e. the
/// two readings of the reduction hypothesis would treat p differently.
bool hypothesis_readings_disagree(const ContactProfile& p);

/// sum_{k : beta_k > 0} k (alpha + e_k, beta - e_k). Throws NotReducible when
/// free_points(p) <= 0.
LinearCombination expand_once(const ContactProfile& p);

/// Repeated expansion down to profiles with no free points. Memoized.
class ProfileReducer {
 public:
  LinearCombination reduce(const ContactProfile& p) const;

 private:
  mutable std::mutex mutex_;
  mutable std::map<ContactProfile, LinearCombination> memo_;
};

LinearCombination reduce_to_terminal(const ContactProfile& p);

/// N_d(a,b,c) for the cubic profile matching p. Throws NotEvaluable (delta !=
/// 3), UnsupportedOrder (orders >= 3) or ProfileMismatch (bad weight).
Rational evaluate_cubic_profile(const ContactProfile& p, const TangencyCounter& counter);

/// sum of coefficient * evaluate_cubic_profile over the terms.
Rational evaluate_combination(const LinearCombination& combination, const TangencyCounter& counter);

}  // namespace tangenttab

#pragma once

#include "tangenttab/kcoeff.hpp"
#include "tangenttab/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tangenttab {

/// Rational degree-d curves with `a` specified simple contacts, `b` specified
/// tangencies and `c` unspecified tangencies to a smooth cubic, through the
/// remaining free points.
struct TangencyProblem {
  int d = 1;
  int a = 0;
  int b = 0;
  int c = 0;

  bool is_valid() const;
  /// Number of general points of the plane the curves pass through.
  long free_points() const { return 3L * d - 1 - a - 2L * b - c; }
  std::string label() const;

  friend bool operator==(const TangencyProblem&, const TangencyProblem&) = default;
};

/// Closed-form evaluator for N_d(a, b, c) on top of a K coefficient engine.
class TangencyCounter {
 public:
  explicit TangencyCounter(const KCoefficientEngine& engine) : engine_(&engine) {}

  /// 2^c K_d^{b+c} [C(t,c) + 2 C(t,c-1)] for valid problems, 0 otherwise.
  /// Throws CalibrationMismatch if a valid count is not a nonnegative integer.
  Rational count(const TangencyProblem& p) const;
  Rational count(int d, int a, int b, int c) const { return count({d, a, b, c}); }

  /// P_d^{b,c}(t) = N_d(3d-1-2b-c-t, b, c).
  Rational p_value(int d, int b, int c, long t) const;

  /// The polynomial Q_d^{b,c} extending P over the whole line; it agrees with
  /// P on 0 <= t <= 3d-1-2b-c.
  Rational q_value(int d, int b, int c, long t) const;

  /// (alpha_0, alpha_1) in Q = alpha_0 C(t,c) + alpha_1 C(t,c-1); every other
  /// coefficient in that binomial basis is zero.
  std::pair<Rational, Rational> q_coefficients(int d, int b, int c) const;

  /// Genus-0 invariant I_d(p^{3d-1-a-c} alpha^{3d-a-2c} beta^a) of the root
  /// stack, equal to (3d-a-2c)! N_d(a, 0, c). Throws RangeError outside the
  /// hypotheses d > 0, a,c >= 0, a+2c <= 3d, a+c <= 3d-1.
  Rational gw_invariant(int d, int a, int c) const;

  const KCoefficientEngine& engine() const { return *engine_; }

 private:
  const KCoefficientEngine* engine_;
};

enum class CheckStatus { pass, fail, skipped };

struct CheckEntry {
  std::string label;
  CheckStatus status;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckEntry> entries;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool ok() const { return failed() == 0; }
  void merge(const VerificationReport& other);
};

/// N_d(a,b,c) = N_d(a+1,b,c) + 2 N_d(a,b+1,c-1) whenever a+2b+c < 3d-1.
VerificationReport verify_ch_identity(const TangencyCounter& counter, int dmax);

/// N_d(a,b-1,1) = 4 N_d(a-1,b,0) whenever a+2b = 3d, a >= 1, b >= 1.
VerificationReport verify_key_relation(const TangencyCounter& counter, int dmax);

/// Delta P_d^{b,c}(t) = 2 P_d^{b+1,c-1}(t) for 0 <= t <= 3d-2-2b-c.
VerificationReport verify_delta(const TangencyCounter& counter, int dmax);

/// Q vanishing below c-1, the boundary identity Q^{b,c}(c-1) = 2^{c-1} Q^{b+c-1,1}(0),
/// alpha_1 = 2 alpha_0 and P = Q on the support interval.
VerificationReport verify_polynomial(const TangencyCounter& counter, int dmax);

/// Every valid count is a nonnegative integer; every K has the required integrality.
VerificationReport verify_integrality(const TangencyCounter& counter, int dmax);

/// Enumerates valid problems of degree d.
std::vector<TangencyProblem> valid_problems(int d);

}  // namespace tangenttab

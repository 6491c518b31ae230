#include "tangenttab/tangency.hpp"

#include "tangenttab/combinatorics.hpp"
#include "tangenttab/errors.hpp"

#include <functional>

namespace tangenttab {

namespace {

// Binomial polynomial t(t-1)...(t-c+1)/c! evaluated at any integer t.
Rational binomial_polynomial(long t, long c) {
  if (c < 0) return 0;
  Integer num = 1;
  for (long i = 0; i < c; ++i) num *= Integer(t - i);
  Rational r(num, factorial(static_cast<unsigned long>(c)));
  r.canonicalize();
  return r;
}

std::string tuple_label(std::string_view name, std::initializer_list<long> args) {
  std::string s(name);
  s += '(';
  bool first = true;
  for (long v : args) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + ')';
}

// Runs one check, turning missing data into a skip and any other engine error
// into a failure.
CheckEntry run_check(std::string label, const std::function<std::string()>& body) {
  try {
    std::string problem = body();
    return {std::move(label), problem.empty() ? CheckStatus::pass : CheckStatus::fail,
            std::move(problem)};
  } catch (const UnknownNormalization& e) {
    return {std::move(label), CheckStatus::skipped, e.what()};
  } catch (const ZeroNormalization& e) {
    return {std::move(label), CheckStatus::skipped, e.what()};
  } catch (const Error& e) {
    return {std::move(label), CheckStatus::fail, e.what()};
  }
}

std::string mismatch(const Rational& lhs, const Rational& rhs) {
  if (lhs == rhs) return {};
  return "lhs " + to_fraction_string(lhs) + " != rhs " + to_fraction_string(rhs);
}

}  // namespace

bool TangencyProblem::is_valid() const {
  return d >= 1 && a >= 0 && b >= 0 && c >= 0 && a + 2L * b + 2L * c <= 3L * d &&
         a + 2L * b + c <= 3L * d - 1;
}

std::string TangencyProblem::label() const { return tuple_label("N_" + std::to_string(d), {a, b, c}); }

Rational TangencyCounter::count(const TangencyProblem& p) const {
  if (!p.is_valid()) return 0;
  const long t = p.free_points();
  const Rational k = engine_->k(p.d, p.b + p.c);
  Rational n = Rational(pow2(p.c)) * k * Rational(binom(t, p.c) + 2 * binom(t, p.c - 1));
  if (!is_integer(n) || n < 0)
    throw CalibrationMismatch(p.label() + " = " + to_fraction_string(n) +
                              " is not a nonnegative integer");
  return n;
}

Rational TangencyCounter::p_value(int d, int b, int c, long t) const {
  const long a = 3L * d - 1 - 2L * b - c - t;
  if (a < 0 || t < 0) return 0;
  return count({d, static_cast<int>(a), b, c});
}

Rational TangencyCounter::q_value(int d, int b, int c, long t) const {
  auto [a0, a1] = q_coefficients(d, b, c);
  return a0 * binomial_polynomial(t, c) + a1 * binomial_polynomial(t, c - 1);
}

std::pair<Rational, Rational> TangencyCounter::q_coefficients(int d, int b, int c) const {
  if (b < 0 || c < 0) throw RangeError("b and c must be nonnegative");
  Rational a0 = Rational(pow2(c)) * engine_->k(d, b + c);
  return {a0, a0 * 2};
}

Rational TangencyCounter::gw_invariant(int d, int a, int c) const {
  if (d < 1 || a < 0 || c < 0 || a + 2L * c > 3L * d || a + c > 3L * d - 1)
    throw RangeError("gw_invariant requires d > 0, a,c >= 0, a+2c <= 3d, a+c <= 3d-1");
  return Rational(factorial(3UL * d - a - 2UL * c)) * count({d, a, 0, c});
}

// ---------------------------------------------------------------------------

std::size_t VerificationReport::passed() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.status == CheckStatus::pass;
  return n;
}

std::size_t VerificationReport::failed() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.status == CheckStatus::fail;
  return n;
}

std::size_t VerificationReport::skipped() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.status == CheckStatus::skipped;
  return n;
}

void VerificationReport::merge(const VerificationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

std::vector<TangencyProblem> valid_problems(int d) {
  std::vector<TangencyProblem> out;
  for (int b = 0; 2 * b <= 3 * d; ++b)
    for (int c = 0; 2 * b + 2 * c <= 3 * d; ++c)
      for (int a = 0; a + 2 * b + 2 * c <= 3 * d; ++a) {
        TangencyProblem p{d, a, b, c};
        if (p.is_valid()) out.push_back(p);
      }
  return out;
}

VerificationReport verify_ch_identity(const TangencyCounter& counter, int dmax) {
  VerificationReport report{"ch", {}};
  for (int d = 1; d <= dmax; ++d)
    for (const auto& p : valid_problems(d)) {
      if (p.a + 2L * p.b + p.c >= 3L * d - 1) continue;
      report.entries.push_back(run_check(p.label(), [&] {
        return mismatch(counter.count(p), counter.count(d, p.a + 1, p.b, p.c) +
                                              2 * counter.count(d, p.a, p.b + 1, p.c - 1));
      }));
    }
  return report;
}

VerificationReport verify_key_relation(const TangencyCounter& counter, int dmax) {
  VerificationReport report{"key", {}};
  for (int d = 1; d <= dmax; ++d)
    for (int b = 1; 2 * b < 3 * d; ++b) {
      const int a = 3 * d - 2 * b;
      report.entries.push_back(run_check(tuple_label("key_" + std::to_string(d), {a, b}), [&] {
        return mismatch(counter.count(d, a, b - 1, 1), 4 * counter.count(d, a - 1, b, 0));
      }));
    }
  return report;
}

VerificationReport verify_delta(const TangencyCounter& counter, int dmax) {
  VerificationReport report{"delta", {}};
  for (int d = 1; d <= dmax; ++d)
    for (int b = 0; 2 * b <= 3 * d; ++b)
      for (int c = 0; 2 * b + 2 * c <= 3 * d && 2 * b + c <= 3 * d - 1; ++c)
        for (long t = 0; t <= 3L * d - 2 - 2L * b - c; ++t) {
          auto label = tuple_label("dP_" + std::to_string(d), {b, c, t});
          report.entries.push_back(run_check(label, [&] {
            Rational delta = forward_difference(
                [&](long s) { return counter.p_value(d, b, c, s); }, t);
            return mismatch(delta, 2 * counter.p_value(d, b + 1, c - 1, t));
          }));
        }
  return report;
}

VerificationReport verify_polynomial(const TangencyCounter& counter, int dmax) {
  VerificationReport report{"poly", {}};
  for (int d = 1; d <= dmax; ++d)
    for (int b = 0; 2 * b <= 3 * d; ++b)
      for (int c = 0; 2 * b + 2 * c <= 3 * d && 2 * b + c <= 3 * d - 1; ++c) {
        const long top = 3L * d - 1 - 2L * b - c;
        auto tag = [&](std::string_view what) {
          return tuple_label(std::string(what) + "_" + std::to_string(d), {b, c});
        };
        report.entries.push_back(run_check(tag("Pzero"), [&]() -> std::string {
          for (long t = 0; t <= c - 2L; ++t) {
            if (counter.p_value(d, b, c, t) != 0) return "P nonzero at t=" + std::to_string(t);
            if (counter.q_value(d, b, c, t) != 0) return "Q nonzero at t=" + std::to_string(t);
          }
          return {};
        }));
        report.entries.push_back(run_check(tag("PeqQ"), [&]() -> std::string {
          for (long t = std::max(0L, c - 1L); t <= top; ++t) {
            auto m = mismatch(counter.p_value(d, b, c, t), counter.q_value(d, b, c, t));
            if (!m.empty()) return "t=" + std::to_string(t) + ": " + m;
          }
          return {};
        }));
        report.entries.push_back(run_check(tag("Qdegree"), [&]() -> std::string {
          // The (c+1)-th forward difference of a degree <= c polynomial vanishes.
          for (long t = 0; t <= top; ++t) {
            Rational acc = 0;
            for (int i = 0; i <= c + 1; ++i) {
              Rational term = Rational(binom(c + 1, i)) * counter.q_value(d, b, c, t + i);
              acc += ((c + 1 - i) % 2 == 0) ? term : Rational(-term);
            }
            if (acc != 0) return "nonzero difference at t=" + std::to_string(t);
          }
          return {};
        }));
        report.entries.push_back(run_check(tag("alpha1"), [&] {
          auto [a0, a1] = counter.q_coefficients(d, b, c);
          return mismatch(a1, 2 * a0);
        }));
        if (c >= 1)
          report.entries.push_back(run_check(tag("boundary"), [&] {
            return mismatch(counter.q_value(d, b, c, c - 1),
                            Rational(pow2(c - 1)) * counter.q_value(d, b + c - 1, 1, 0));
          }));
      }
  return report;
}

VerificationReport verify_integrality(const TangencyCounter& counter, int dmax) {
  VerificationReport report{"integrality", {}};
  for (int d = 1; d <= dmax; ++d) {
    for (int lambda = 0; 2 * lambda <= 3 * d; ++lambda)
      report.entries.push_back(
          run_check(tuple_label("K_" + std::to_string(d), {lambda}), [&]() -> std::string {
            check_k_integrality(d, lambda, counter.engine().k(d, lambda));
            return {};
          }));
    for (const auto& p : valid_problems(d))
      report.entries.push_back(run_check(p.label(), [&]() -> std::string {
        Rational n = counter.count(p);
        if (!is_integer(n) || n < 0) return "not a nonnegative integer";
        return {};
      }));
  }
  return report;
}

}  // namespace tangenttab

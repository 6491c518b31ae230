#pragma once

#include "tangenttab/kcoeff.hpp"
#include "tangenttab/numeric.hpp"
#include "tangenttab/polynomial.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tangenttab {

using Point = std::array<Rational, 3>;
using Exponent = std::array<int, 3>;

Point cross(const Point& u, const Point& v);
Rational dot(const Point& u, const Point& v);
/// det[p, q, r] == 0.
bool collinear(const Point& p, const Point& q, const Point& r);

/// Homogeneous polynomial in (x, y, z). Coefficients follow monomials(degree):
/// x-exponent descending, then y-exponent descending.
class TernaryForm {
 public:
  TernaryForm() = default;
  TernaryForm(int degree, std::vector<Rational> coefficients);

  static const std::vector<Exponent>& monomials(int degree);
  static TernaryForm linear(const Point& coefficients);

  int degree() const { return degree_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  Rational operator()(const Point& p) const;
  Point gradient(const Point& p) const;
  /// Directional derivative grad F(p) . r.
  Rational polar(const Point& p, const Point& r) const { return dot(gradient(p), r); }

  /// Monomial values at p: the row imposing F(p) = 0 on unknown coefficients.
  static std::vector<Rational> point_row(int degree, const Point& p);
  /// The row imposing grad F(p) . r = 0 on unknown coefficients.
  static std::vector<Rational> polar_row(int degree, const Point& p, const Point& r);

  /// F(M p) as a form in p; `columns` are the images of the basis vectors.
  TernaryForm substituted(const std::array<Point, 3>& columns) const;

  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);

 private:
  int degree_ = 0;
  std::vector<Rational> coeffs_;
};

/// Plane cubic with exact coefficients. Smoothness is not certified; singular
/// input shows up as identically vanishing eliminants.
class PlaneCubic {
 public:
  explicit PlaneCubic(TernaryForm form);
  const TernaryForm& form() const { return form_; }
  Rational operator()(const Point& p) const { return form_(p); }
  Point gradient(const Point& p) const { return form_.gradient(p); }
  bool contains(const Point& p) const { return form_(p) == 0; }

 private:
  TernaryForm form_;
};

/// A point with a tangent direction, given as a second point on the line.
struct Flag {
  Point point;
  Point through;
};

/// Linear conditions on the six coefficients of a conic.
class ConicSystem {
 public:
  void add_point(const Point& p);
  void add_flag(const Flag& f);
  std::size_t conditions() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  std::size_t rank() const;
  /// The unique conic when the conditions have rank 5.
  TernaryForm solve() const;

 private:
  std::vector<std::vector<Rational>> rows_;
};

Rational conic_determinant(const TernaryForm& conic);

/// Number of conics through `points` having the given flags, for a total of
/// five linear conditions. Returns 1 for a nondegenerate configuration; throws
/// DegenerateConfiguration if three constraint points are collinear, a flag
/// line holds another constraint point, the system has rank < 5, or the
/// solution is a singular conic.
int conic_count(std::span<const Point> points, std::span<const Flag> flags);
int conic_flag_count(std::span<const Point, 3> points, const Flag& flag);

/// Exact root count of an eliminant with diagnostics.
struct EliminantCount {
  int count = 0;
  int real_roots = 0;
  Polynomial eliminant;
};

/// Deterministic source of small rationals.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
  Rational scalar();
  Rational nonzero_scalar();
  Point point();
  std::uint64_t next_seed() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

/// Tangent lines to E through q. With q off E this is the class of E; with q
/// on E the tangent line at q itself is discarded.
EliminantCount tangent_lines_count(const PlaneCubic& e, const Point& q, RationalSampler& sampler);

/// Members of the pencil of conics through four points that are tangent to E.
EliminantCount pencil_tangency_count(std::span<const Point, 4> points, const PlaneCubic& e,
                                     RationalSampler& sampler);

struct CubicThroughPoints {
  PlaneCubic cubic;
  std::vector<Point> points;
};

PlaneCubic random_cubic(RationalSampler& sampler);
/// A cubic through nine random points (which are returned).
CubicThroughPoints random_cubic_with_points(RationalSampler& sampler);
/// A cubic with a rational inflection point, in a random frame.
CubicThroughPoints random_cubic_with_flex(RationalSampler& sampler);
/// The flag of E's tangent line at a smooth point p of E.
Flag tangent_flag(const PlaneCubic& e, const Point& p, RationalSampler& sampler);

enum class OracleKind { conic_points, conic_flag, conic_two_flags, tangent_lines, tangent_lines_on_curve, pencil };

std::string_view to_string(OracleKind kind);
OracleKind parse_oracle_kind(std::string_view name);
std::span<const OracleKind> all_oracle_kinds();
/// The count each oracle is expected to return on accepted trials.
int expected_oracle_count(OracleKind kind);

struct TrialSummary {
  OracleKind kind = OracleKind::conic_points;
  std::uint64_t seed = 0;
  int trials = 0;
  int accepted = 0;
  int rejected = 0;
  std::map<int, int> counts;
  std::vector<std::string> rejections;

  /// Every accepted trial returned the expected count and at least one was accepted.
  bool consistent() const;
};

TrialSummary run_oracle_trials(OracleKind kind, std::uint64_t seed, int trials);

struct CalibrationReport {
  NormalizationTable table;
  std::vector<std::string> derivation;
  std::vector<TrialSummary> oracle_runs;
  bool matches_shipped = false;
};

/// Rebuilds the shipped normalization table: the gauge f_1^(0) = 1 and the
/// assumed f_1^(1) = 1 are fixed, then K_2^0, K_2^1 and K_2^2 are measured with
/// the conic oracles and each f_2^(b) is solved from the recursion.
CalibrationReport calibrate_normalization(std::uint64_t seed, int trials);

}  // namespace tangenttab

#pragma once

#include "tangenttab/numeric.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace tangenttab {

/// Dense univariate polynomial over Q, coefficients in ascending order with
/// no trailing zeros. The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, unsigned power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct QuotientRemainder {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws DivisionByZero for a zero divisor.
QuotientRemainder divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), made monic.
Polynomial squarefree_part(const Polynomial& p);

/// Distinct complex roots, i.e. the degree of the squarefree part.
int distinct_root_count(const Polynomial& p);

/// Sturm chain p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Distinct real roots, by sign variations of the Sturm chain at -inf and +inf.
int real_root_count(const Polynomial& p);

/// Newton interpolation through (xs[i], ys[i]); xs must be distinct.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Recovers a polynomial of degree <= degree_bound from exact samples of f at
/// 0, 1, ..., degree_bound, then confirms it on two further samples. Throws
/// std::logic_error if the confirmation fails (the bound was wrong).
Polynomial fit_polynomial(const std::function<Rational(const Rational&)>& f, int degree_bound);

/// Resultant of two polynomials given by ascending coefficient vectors of
/// fixed formal degree (leading entries may be zero): the Sylvester determinant.
Rational sylvester_resultant(std::span<const Rational> f, std::span<const Rational> g);

}  // namespace tangenttab

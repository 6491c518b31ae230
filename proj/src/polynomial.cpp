#include "tangenttab/polynomial.hpp"

#include "tangenttab/errors.hpp"
#include "tangenttab/matrix.hpp"

#include <stdexcept>

namespace tangenttab {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial p = *this;
  const Rational lead = leading();
  for (auto& c : p.coeffs_) c /= lead;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Rational mag = abs(c);
    if (mag != 1 || i == 0) s += mag.get_str();
    if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

QuotientRemainder divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).quotient.monic();
}

int distinct_root_count(const Polynomial& p) {
  if (p.is_zero()) throw IdenticallyZeroEliminant("the zero polynomial has no finite root count");
  return squarefree_part(p).degree();
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Polynomial next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    const auto& prev = seq[seq.size() - 2];
    next = -divmod(prev, seq.back()).remainder;
  }
  return seq;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int real_root_count(const Polynomial& p) {
  if (p.is_zero()) throw IdenticallyZeroEliminant("the zero polynomial has no finite root count");
  auto seq = sturm_sequence(p);
  std::vector<int> at_neg, at_pos;
  for (const auto& q : seq) {
    const int s = sgn(q.leading());
    at_pos.push_back(s);
    at_neg.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational span = xs[i] - xs[i - level];
      if (span == 0) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  Polynomial result;
  for (std::size_t k = n; k-- > 0;) {
    result *= Polynomial({-xs[k], Rational(1)});
    result += Polynomial::constant(dd[k]);
  }
  return result;
}

Polynomial fit_polynomial(const std::function<Rational(const Rational&)>& f, int degree_bound) {
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= degree_bound; ++i) {
    xs.emplace_back(i);
    ys.push_back(f(xs.back()));
  }
  Polynomial p = interpolate(xs, ys);
  for (int extra : {degree_bound + 1, -1}) {
    const Rational x(extra);
    if (p(x) != f(x)) throw std::logic_error("fit_polynomial: degree bound " + std::to_string(degree_bound) + " too small");
  }
  return p;
}

Rational sylvester_resultant(std::span<const Rational> f, std::span<const Rational> g) {
  if (f.empty() || g.empty()) throw std::invalid_argument("sylvester_resultant: empty coefficient vector");
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  if (size == 0) return 1;
  RationalMatrix s(size, size);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s(r, r + j) = f[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s(n + r, r + j) = g[n - j];
  return determinant(std::move(s));
}

}  // namespace tangenttab

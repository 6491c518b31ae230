#include "tangenttab/oracle.hpp"

#include "tangenttab/errors.hpp"
#include "tangenttab/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace tangenttab {

namespace {

Rational power(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<Exponent> build_monomials(int degree) {
  std::vector<Exponent> out;
  for (int i = degree; i >= 0; --i)
    for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
  return out;
}

constexpr int kMaxDegree = 8;

std::size_t monomial_index(int degree, const Exponent& e) {
  const auto& mons = TernaryForm::monomials(degree);
  auto it = std::find(mons.begin(), mons.end(), e);
  return static_cast<std::size_t>(it - mons.begin());
}

bool is_zero_point(const Point& p) { return p[0] == 0 && p[1] == 0 && p[2] == 0; }

bool same_point(const Point& p, const Point& q) { return is_zero_point(cross(p, q)); }

Point operator+(const Point& a, const Point& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Point operator*(const Rational& s, const Point& a) { return {s * a[0], s * a[1], s * a[2]}; }

TernaryForm combine(const TernaryForm& a, const Rational& sa, const TernaryForm& b, const Rational& sb) {
  std::vector<Rational> c(a.coefficients().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sa * a.coefficients()[i] + sb * b.coefficients()[i];
  return TernaryForm(a.degree(), std::move(c));
}

// Ascending coefficients in y of F(x, y, 1) at a fixed x, padded to the
// formal degree of F.
std::vector<Rational> y_coefficients(const TernaryForm& f, const Rational& x) {
  std::vector<Rational> out(static_cast<std::size_t>(f.degree() + 1));
  const auto& mons = TernaryForm::monomials(f.degree());
  for (std::size_t m = 0; m < mons.size(); ++m)
    out[static_cast<std::size_t>(mons[m][1])] += f.coefficients()[m] * power(x, mons[m][0]);
  return out;
}

std::vector<Rational> padded(const Polynomial& p, std::size_t length) {
  std::vector<Rational> v(length);
  for (std::size_t i = 0; i < length; ++i) v[i] = p[i];
  if (p.degree() >= static_cast<int>(length)) throw std::logic_error("polynomial exceeds formal degree");
  return v;
}

bool general_position(std::span<const Point> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (same_point(pts[i], pts[j])) return false;
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (collinear(pts[i], pts[j], pts[k])) return false;
    }
  return true;
}

}  // namespace

Point cross(const Point& u, const Point& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Rational dot(const Point& u, const Point& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

bool collinear(const Point& p, const Point& q, const Point& r) { return dot(cross(p, q), r) == 0; }

// ---------------------------------------------------------------------------
// TernaryForm

TernaryForm::TernaryForm(int degree, std::vector<Rational> coefficients)
    : degree_(degree), coeffs_(std::move(coefficients)) {
  if (degree < 0 || degree > kMaxDegree) throw RangeError("unsupported form degree");
  if (coeffs_.size() != monomials(degree).size()) throw std::invalid_argument("coefficient count mismatch");
}

const std::vector<Exponent>& TernaryForm::monomials(int degree) {
  static const auto table = [] {
    std::vector<std::vector<Exponent>> t;
    for (int d = 0; d <= kMaxDegree; ++d) t.push_back(build_monomials(d));
    return t;
  }();
  if (degree < 0 || degree > kMaxDegree) throw RangeError("unsupported form degree");
  return table[static_cast<std::size_t>(degree)];
}

TernaryForm TernaryForm::linear(const Point& c) { return TernaryForm(1, {c[0], c[1], c[2]}); }

bool TernaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Rational TernaryForm::operator()(const Point& p) const {
  const auto row = point_row(degree_, p);
  Rational acc = 0;
  for (std::size_t i = 0; i < row.size(); ++i) acc += coeffs_[i] * row[i];
  return acc;
}

Point TernaryForm::gradient(const Point& p) const {
  Point g{0, 0, 0};
  const auto& mons = monomials(degree_);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    for (int axis = 0; axis < 3; ++axis) {
      const int e = mons[m][static_cast<std::size_t>(axis)];
      if (e == 0) continue;
      Rational term = coeffs_[m] * e;
      for (int v = 0; v < 3; ++v)
        term *= power(p[static_cast<std::size_t>(v)], mons[m][static_cast<std::size_t>(v)] - (v == axis ? 1 : 0));
      g[static_cast<std::size_t>(axis)] += term;
    }
  }
  return g;
}

std::vector<Rational> TernaryForm::point_row(int degree, const Point& p) {
  const auto& mons = monomials(degree);
  std::vector<Rational> row;
  row.reserve(mons.size());
  for (const auto& e : mons) row.push_back(power(p[0], e[0]) * power(p[1], e[1]) * power(p[2], e[2]));
  return row;
}

std::vector<Rational> TernaryForm::polar_row(int degree, const Point& p, const Point& r) {
  const auto& mons = monomials(degree);
  std::vector<Rational> row;
  row.reserve(mons.size());
  for (std::size_t m = 0; m < mons.size(); ++m) {
    std::vector<Rational> unit(mons.size());
    unit[m] = 1;
    row.push_back(TernaryForm(degree, std::move(unit)).polar(p, r));
  }
  return row;
}

TernaryForm TernaryForm::substituted(const std::array<Point, 3>& columns) const {
  std::array<TernaryForm, 3> coord;
  for (std::size_t r = 0; r < 3; ++r) coord[r] = linear({columns[0][r], columns[1][r], columns[2][r]});
  TernaryForm out(degree_, std::vector<Rational>(coeffs_.size()));
  const auto& mons = monomials(degree_);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    TernaryForm term(0, {coeffs_[m]});
    for (std::size_t v = 0; v < 3; ++v)
      for (int k = 0; k < mons[m][v]; ++k) term = term * coord[v];
    out = out + term;
  }
  return out;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  const int deg = a.degree_ + b.degree_;
  std::vector<Rational> c(TernaryForm::monomials(deg).size());
  const auto& ma = TernaryForm::monomials(a.degree_);
  const auto& mb = TernaryForm::monomials(b.degree_);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      Exponent e{ma[i][0] + mb[j][0], ma[i][1] + mb[j][1], ma[i][2] + mb[j][2]};
      c[monomial_index(deg, e)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return TernaryForm(deg, std::move(c));
}

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("adding forms of different degree");
  return combine(a, 1, b, 1);
}

PlaneCubic::PlaneCubic(TernaryForm form) : form_(std::move(form)) {
  if (form_.degree() != 3) throw RangeError("a plane cubic needs a degree-3 form");
  if (form_.is_zero()) throw DegenerateConfiguration("the zero form is not a cubic");
}

// ---------------------------------------------------------------------------
// Conics

void ConicSystem::add_point(const Point& p) { rows_.push_back(TernaryForm::point_row(2, p)); }

void ConicSystem::add_flag(const Flag& f) {
  rows_.push_back(TernaryForm::point_row(2, f.point));
  rows_.push_back(TernaryForm::polar_row(2, f.point, f.through));
}

std::size_t ConicSystem::rank() const {
  RationalMatrix m(0, 6);
  for (const auto& row : rows_) m.append_row(row);
  return tangenttab::rank(std::move(m));
}

TernaryForm ConicSystem::solve() const {
  RationalMatrix m(0, 6);
  for (const auto& row : rows_) m.append_row(row);
  auto kernel = nullspace(std::move(m));
  if (kernel.size() != 1)
    throw DegenerateConfiguration("conic conditions have rank " + std::to_string(6 - kernel.size()));
  return TernaryForm(2, kernel.front());
}

Rational conic_determinant(const TernaryForm& conic) {
  if (conic.degree() != 2) throw RangeError("not a conic");
  const auto& c = conic.coefficients();  // x^2, xy, xz, y^2, yz, z^2
  RationalMatrix m(3, 3);
  m(0, 0) = c[0];
  m(1, 1) = c[3];
  m(2, 2) = c[5];
  m(0, 1) = m(1, 0) = c[1] / 2;
  m(0, 2) = m(2, 0) = c[2] / 2;
  m(1, 2) = m(2, 1) = c[4] / 2;
  return determinant(std::move(m));
}

int conic_count(std::span<const Point> points, std::span<const Flag> flags) {
  if (points.size() + 2 * flags.size() != 5)
    throw std::invalid_argument("a conic count needs exactly five linear conditions");
  std::vector<Point> all(points.begin(), points.end());
  for (const auto& f : flags) {
    if (same_point(f.point, f.through)) throw DegenerateConfiguration("flag line is not determined");
    all.push_back(f.point);
  }
  if (!general_position(all)) throw DegenerateConfiguration("three constraint points are collinear or coincide");
  for (const auto& f : flags)
    for (const auto& p : all)
      if (!same_point(p, f.point) && collinear(f.point, f.through, p))
        throw DegenerateConfiguration("a flag line passes through another constraint point");

  ConicSystem system;
  for (const auto& p : points) system.add_point(p);
  for (const auto& f : flags) system.add_flag(f);
  if (system.rank() < 5) throw DegenerateConfiguration("conic conditions are dependent");
  if (conic_determinant(system.solve()) == 0)
    throw DegenerateConfiguration("the only solution is a singular conic");
  return 1;
}

int conic_flag_count(std::span<const Point, 3> points, const Flag& flag) {
  return conic_count(points, std::span<const Flag>(&flag, 1));
}

// ---------------------------------------------------------------------------
// Sampling

Rational RationalSampler::scalar() {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 3);
  const int n = num(rng_);
  const int d = den(rng_);
  Rational q{Integer(n), Integer(d)};
  q.canonicalize();
  return q;
}

Rational RationalSampler::nonzero_scalar() {
  for (;;)
    if (Rational q = scalar(); q != 0) return q;
}

Point RationalSampler::point() {
  for (;;) {
    Point p{scalar(), scalar(), scalar()};
    if (!is_zero_point(p)) return p;
  }
}

PlaneCubic random_cubic(RationalSampler& sampler) {
  for (;;) {
    std::vector<Rational> c(10);
    for (auto& v : c) v = sampler.scalar();
    TernaryForm f(3, std::move(c));
    if (!f.is_zero()) return PlaneCubic(std::move(f));
  }
}

CubicThroughPoints random_cubic_with_points(RationalSampler& sampler) {
  for (;;) {
    std::vector<Point> pts;
    RationalMatrix m(0, 10);
    for (int i = 0; i < 9; ++i) {
      pts.push_back(sampler.point());
      m.append_row(TernaryForm::point_row(3, pts.back()));
    }
    auto kernel = nullspace(std::move(m));
    if (kernel.size() != 1) continue;
    PlaneCubic e(TernaryForm(3, kernel.front()));
    const bool smooth_at_points =
        std::none_of(pts.begin(), pts.end(), [&](const Point& p) { return is_zero_point(e.gradient(p)); });
    if (smooth_at_points && general_position(pts)) return {std::move(e), std::move(pts)};
  }
}

CubicThroughPoints random_cubic_with_flex(RationalSampler& sampler) {
  for (;;) {
    // y*G + x^3 has an inflection point at (0:0:1) with tangent y = 0.
    std::vector<Rational> g(6);
    for (auto& v : g) v = sampler.scalar();
    TernaryForm quadric(2, std::move(g));
    if (quadric({0, 0, 1}) == 0) continue;
    TernaryForm cube = TernaryForm::linear({1, 0, 0}) * TernaryForm::linear({1, 0, 0}) * TernaryForm::linear({1, 0, 0});
    TernaryForm local = TernaryForm::linear({0, 1, 0}) * quadric + cube;

    std::array<Point, 3> cols{sampler.point(), sampler.point(), sampler.point()};
    RationalMatrix aug(3, 4);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) aug(r, c) = cols[c][r];
      aug(r, 3) = r == 2 ? 1 : 0;
    }
    RationalMatrix square(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) square(r, c) = aug(r, c);
    if (determinant(square) == 0) continue;
    row_reduce(aug);
    Point flex{aug(0, 3), aug(1, 3), aug(2, 3)};
    PlaneCubic e(local.substituted(cols));
    if (!e.contains(flex)) throw std::logic_error("flex construction failed");
    return {std::move(e), {flex}};
  }
}

Flag tangent_flag(const PlaneCubic& e, const Point& p, RationalSampler& sampler) {
  const Point g = e.gradient(p);
  if (is_zero_point(g)) throw DegenerateConfiguration("E is singular at the flag point");
  for (int attempt = 0; attempt < 16; ++attempt) {
    Point r = cross(g, sampler.point());
    if (!is_zero_point(r) && !same_point(r, p)) return {p, r};
  }
  throw DegenerateConfiguration("could not pick a second point on the tangent line");
}

// ---------------------------------------------------------------------------
// Tangent lines through a point

EliminantCount tangent_lines_count(const PlaneCubic& e, const Point& q, RationalSampler& sampler) {
  if (is_zero_point(q)) throw std::invalid_argument("(0:0:0) is not a point");
  const bool on_curve = e.contains(q);
  const Point gq = e.gradient(q);
  if (on_curve && is_zero_point(gq)) throw DegenerateConfiguration("q is a singular point of E");

  for (int attempt = 0; attempt < 16; ++attempt) {
    // Lines through q are joined to the points m(u) = P0 + u P1 of an auxiliary line.
    const Point p0 = sampler.point(), p1 = sampler.point();
    if (collinear(q, p0, p1)) continue;
    auto m = [&](const Rational& u) -> Point { return p0 + u * p1; };
    // E(lambda q + mu m) = a lambda^3 + b lambda^2 mu + c lambda mu^2 + d mu^3.
    auto b = [&](const Rational& u) -> Rational { return dot(gq, m(u)); };
    auto c = [&](const Rational& u) -> Rational { return e.form().polar(m(u), q); };
    auto d = [&](const Rational& u) -> Rational { return e(m(u)); };

    if (!on_curve) {
      const Rational a = e(q);
      Polynomial disc = fit_polynomial(
          [&](const Rational& u) -> Rational {
            const Rational bu = b(u), cu = c(u), du = d(u);
            return bu * bu * cu * cu - 4 * a * cu * cu * cu - 4 * bu * bu * bu * du - 27 * a * a * du * du +
                   18 * a * bu * cu * du;
          },
          6);
      if (disc.is_zero()) throw IdenticallyZeroEliminant("tangent-line discriminant vanishes identically");
      if (disc.degree() < 6) continue;
      return {distinct_root_count(disc), real_root_count(squarefree_part(disc)), disc};
    }

    // a = 0: one root is q itself; the residual binary quadric b, c, d decides tangency.
    Polynomial residual = fit_polynomial(
        [&](const Rational& u) -> Rational {
          const Rational cu = c(u);
          return cu * cu - 4 * b(u) * d(u);
        },
        4);
    Polynomial tangent_at_q = fit_polynomial(b, 1);
    if (residual.is_zero()) throw IdenticallyZeroEliminant("tangent-line discriminant vanishes identically");
    if (residual.degree() < 4 || tangent_at_q.degree() < 1) continue;
    // At an inflection point the tangent at q also annihilates the residual.
    for (;;) {
      auto [quot, rem] = divmod(residual, tangent_at_q);
      if (!rem.is_zero()) break;
      residual = quot;
    }
    return {distinct_root_count(residual), real_root_count(squarefree_part(residual)), residual};
  }
  throw DegenerateConfiguration("no auxiliary line avoided a tangency at infinity");
}

// ---------------------------------------------------------------------------
// Pencil of conics

namespace {

// T(s) = Res_x(R, R') with R(x) = Res_y(E, C0 + s C1) in the affine chart of
// the frame, all at formal degrees. Its roots are the tangency parameters
// together with frame-dependent spurious ones.
Polynomial frame_eliminant(const PlaneCubic& e, const TernaryForm& c0, const TernaryForm& c1,
                           const std::array<Point, 3>& frame) {
  const TernaryForm et = e.form().substituted(frame);
  const TernaryForm c0t = c0.substituted(frame);
  const TernaryForm c1t = c1.substituted(frame);
  return fit_polynomial(
      [&](const Rational& s) -> Rational {
        const TernaryForm cs = combine(c0t, 1, c1t, s);
        Polynomial r = fit_polynomial(
            [&](const Rational& x) -> Rational {
              auto ey = y_coefficients(et, x);
              auto cy = y_coefficients(cs, x);
              return sylvester_resultant(ey, cy);
            },
            6);
        auto rc = padded(r, 7);
        auto rd = padded(r.derivative(), 6);
        return sylvester_resultant(rc, rd);
      },
      33);
}

std::array<Point, 3> random_frame(RationalSampler& sampler) {
  for (;;) {
    std::array<Point, 3> cols{sampler.point(), sampler.point(), sampler.point()};
    if (!collinear(cols[0], cols[1], cols[2])) return cols;
  }
}

}  // namespace

EliminantCount pencil_tangency_count(std::span<const Point, 4> points, const PlaneCubic& e,
                                     RationalSampler& sampler) {
  for (const auto& p : points)
    if (e.contains(p)) throw DegenerateConfiguration("a base point of the pencil lies on E");
  if (!general_position(points)) throw DegenerateConfiguration("three base points are collinear");

  RationalMatrix m(0, 6);
  for (const auto& p : points) m.append_row(TernaryForm::point_row(2, p));
  auto basis = nullspace(std::move(m));
  if (basis.size() != 2) throw DegenerateConfiguration("base points do not cut out a pencil");
  const TernaryForm b0(2, basis[0]), b1(2, basis[1]);

  Rational r1, r2, r3, r4;
  do {
    r1 = sampler.scalar();
    r2 = sampler.scalar();
    r3 = sampler.scalar();
    r4 = sampler.scalar();
  } while (r1 * r4 - r2 * r3 == 0);
  const TernaryForm c0 = combine(b0, r1, b1, r2);
  const TernaryForm c1 = combine(b0, r3, b1, r4);

  std::array<Polynomial, 3> t;
  for (auto& ti : t) {
    ti = frame_eliminant(e, c0, c1, random_frame(sampler));
    if (ti.is_zero()) throw IdenticallyZeroEliminant("pencil eliminant vanishes identically");
  }
  Polynomial common = gcd(t[0], t[1]);
  if (gcd(common, t[2]) != common)
    throw ExtraneousFactorAmbiguity("frame-independent part of the eliminant is not stable across frames");
  if (squarefree_part(common) != common)
    throw ExtraneousFactorAmbiguity("frame-independent eliminant has repeated factors");
  return {common.degree(), real_root_count(common), common};
}

// ---------------------------------------------------------------------------
// Trials

namespace {

constexpr std::array<OracleKind, 6> kAllKinds{OracleKind::conic_points,  OracleKind::conic_flag,
                                              OracleKind::conic_two_flags, OracleKind::tangent_lines,
                                              OracleKind::tangent_lines_on_curve, OracleKind::pencil};

int run_single_trial(OracleKind kind, RationalSampler& s) {
  switch (kind) {
    case OracleKind::conic_points: {
      std::array<Point, 5> pts{s.point(), s.point(), s.point(), s.point(), s.point()};
      return conic_count(pts, {});
    }
    case OracleKind::conic_flag: {
      auto e = random_cubic_with_points(s);
      std::array<Flag, 1> flags{tangent_flag(e.cubic, e.points[0], s)};
      std::array<Point, 3> pts{s.point(), s.point(), s.point()};
      return conic_count(pts, flags);
    }
    case OracleKind::conic_two_flags: {
      auto e = random_cubic_with_points(s);
      std::array<Flag, 2> flags{tangent_flag(e.cubic, e.points[0], s), tangent_flag(e.cubic, e.points[1], s)};
      std::array<Point, 1> pts{s.point()};
      return conic_count(pts, flags);
    }
    case OracleKind::tangent_lines: {
      PlaneCubic e = random_cubic(s);
      Point q = s.point();
      while (e.contains(q)) q = s.point();
      return tangent_lines_count(e, q, s).count;
    }
    case OracleKind::tangent_lines_on_curve: {
      auto e = random_cubic_with_points(s);
      return tangent_lines_count(e.cubic, e.points[0], s).count;
    }
    case OracleKind::pencil: {
      PlaneCubic e = random_cubic(s);
      std::array<Point, 4> pts{s.point(), s.point(), s.point(), s.point()};
      return pencil_tangency_count(pts, e, s).count;
    }
  }
  throw std::logic_error("unknown oracle");
}

}  // namespace

std::string_view to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::conic_points: return "conic-points";
    case OracleKind::conic_flag: return "conic-flag";
    case OracleKind::conic_two_flags: return "conic-two-flags";
    case OracleKind::tangent_lines: return "tangent-lines";
    case OracleKind::tangent_lines_on_curve: return "tangent-lines-on-curve";
    case OracleKind::pencil: return "pencil";
  }
  return "?";
}

OracleKind parse_oracle_kind(std::string_view name) {
  for (auto k : kAllKinds)
    if (to_string(k) == name) return k;
  throw ParseError("unknown oracle '" + std::string(name) + "'");
}

std::span<const OracleKind> all_oracle_kinds() { return kAllKinds; }

int expected_oracle_count(OracleKind kind) {
  switch (kind) {
    case OracleKind::conic_points:
    case OracleKind::conic_flag:
    case OracleKind::conic_two_flags: return 1;
    case OracleKind::tangent_lines: return 6;
    case OracleKind::tangent_lines_on_curve: return 4;
    case OracleKind::pencil: return 12;
  }
  return -1;
}

bool TrialSummary::consistent() const {
  if (accepted == 0) return false;
  return counts.size() == 1 && counts.begin()->first == expected_oracle_count(kind);
}

TrialSummary run_oracle_trials(OracleKind kind, std::uint64_t seed, int trials) {
  TrialSummary summary;
  summary.kind = kind;
  summary.seed = seed;
  summary.trials = trials;
  std::seed_seq seq{seed, static_cast<std::uint64_t>(kind)};
  std::mt19937_64 master(seq);
  for (int i = 0; i < trials; ++i) {
    RationalSampler sampler(master());
    try {
      ++summary.counts[run_single_trial(kind, sampler)];
      ++summary.accepted;
    } catch (const DegenerateConfiguration& e) {
      ++summary.rejected;
      summary.rejections.push_back("trial " + std::to_string(i) + ": " + e.what());
    } catch (const IdenticallyZeroEliminant& e) {
      ++summary.rejected;
      summary.rejections.push_back("trial " + std::to_string(i) + ": " + e.what());
    } catch (const ExtraneousFactorAmbiguity& e) {
      ++summary.rejected;
      summary.rejections.push_back("trial " + std::to_string(i) + ": " + e.what());
    }
  }
  return summary;
}

// ---------------------------------------------------------------------------
// Calibration

CalibrationReport calibrate_normalization(std::uint64_t seed, int trials) {
  CalibrationReport report;
  NormalizationTable base;
  base.set(1, 0, 1, NormalizationSource::shipped_default);
  base.set(1, 1, 1, NormalizationSource::shipped_default);
  report.derivation.push_back("f_1^(0) = 1  [gauge: every f_d^(b) -> x^d f_d^(b) leaves K unchanged]");
  report.derivation.push_back("f_1^(1) = 1  [assumed: no available oracle pins it]");

  KCoefficientEngine engine(base);
  const std::array<std::pair<int, OracleKind>, 3> plan{{{0, OracleKind::conic_points},
                                                        {1, OracleKind::conic_flag},
                                                        {2, OracleKind::conic_two_flags}}};
  bool complete = true;
  for (const auto& [b, kind] : plan) {
    TrialSummary run = run_oracle_trials(kind, seed, trials);
    report.oracle_runs.push_back(run);
    const std::string k_name = "K_2^" + std::to_string(b);
    if (!run.consistent()) {
      report.derivation.push_back(k_name + ": oracle " + std::string(to_string(kind)) +
                                  " inconsistent; f_2^(" + std::to_string(b) + ") not derived");
      complete = false;
      continue;
    }
    const Rational measured = run.counts.begin()->first;
    const Rational rhs = engine.recursion_rhs(2, b);
    const Rational f = engine.solve_normalization(2, b, measured);
    report.derivation.push_back(k_name + " = " + measured.get_str() + "  [oracle " + std::string(to_string(kind)) +
                                ": " + std::to_string(run.accepted) + "/" + std::to_string(run.trials) +
                                " accepted trials, all count " + measured.get_str() + "]");
    report.derivation.push_back("f_2^(" + std::to_string(b) + ") = RHS(2," + std::to_string(b) + ") / " + k_name +
                                " = " + rhs.get_str() + " / " + measured.get_str() + " = " + f.get_str());
  }
  report.table = engine.normalization();
  report.matches_shipped = complete && report.table == NormalizationTable::shipped();
  return report;
}

}  // namespace tangenttab

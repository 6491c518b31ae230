#include "tangenttab/kcoeff.hpp"

#include "tangenttab/combinatorics.hpp"
#include "tangenttab/errors.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace tangenttab {

namespace {

struct TableLine {
  int d;
  int index;
  Rational value;
};

int parse_small_int(const std::string& token, int line_no) {
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": malformed integer '" + token + "'");
  }
}

std::vector<TableLine> parse_table_lines(std::istream& in) {
  std::vector<TableLine> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 3)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'd index num/den'");
    TableLine entry{parse_small_int(tokens[0], line_no), parse_small_int(tokens[1], line_no), 0};
    if (entry.d < 1 || entry.index < 0)
      throw ParseError("line " + std::to_string(line_no) + ": degree must be >= 1 and index >= 0");
    try {
      entry.value = parse_rational(tokens[2]);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  return in;
}

}  // namespace

std::string_view to_string(NormalizationSource source) {
  switch (source) {
    case NormalizationSource::shipped_default: return "shipped-default";
    case NormalizationSource::user_supplied: return "user-supplied";
    case NormalizationSource::solved: return "solved";
  }
  return "?";
}

std::string_view to_string(KSource source) {
  switch (source) {
    case KSource::base_case: return "base-case";
    case KSource::recursion: return "recursion";
    case KSource::user_override: return "user-override";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// NormalizationTable

NormalizationTable NormalizationTable::shipped() {
  NormalizationTable t;
  constexpr auto src = NormalizationSource::shipped_default;
  t.set(1, 0, 1, src);
  t.set(1, 1, 1, src);
  t.set(2, 0, 1, src);
  t.set(2, 1, 4, src);
  t.set(2, 2, 1, src);
  return t;
}

NormalizationTable NormalizationTable::parse(std::istream& in, NormalizationSource source) {
  NormalizationTable t;
  for (auto& line : parse_table_lines(in)) t.set(line.d, line.index, line.value, source);
  return t;
}

NormalizationTable NormalizationTable::load(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse(in);
}

void NormalizationTable::set(int d, int b, const Rational& value, NormalizationSource source) {
  entries_[{d, b}] = NormalizationEntry{value, source};
}

const NormalizationEntry* NormalizationTable::find(int d, int b) const {
  auto it = entries_.find({d, b});
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<Rational> NormalizationTable::value(int d, int b) const {
  if (const auto* e = find(d, b)) return e->value;
  if (b == 0) {
    if (const auto* unit = find(1, 0)) {
      Rational r = 1;
      for (int i = 0; i < d; ++i) r *= unit->value;
      return r;
    }
  }
  return std::nullopt;
}

NormalizationTable NormalizationTable::rescaled(const Rational& x) const {
  NormalizationTable t;
  for (const auto& [key, entry] : entries_) {
    Rational scale = 1;
    for (int i = 0; i < key.first; ++i) scale *= x;
    t.entries_[key] = {entry.value * scale, entry.source};
  }
  return t;
}

void NormalizationTable::write(std::ostream& out) const {
  for (const auto& [key, entry] : entries_)
    out << key.first << ' ' << key.second << ' ' << to_fraction_string(entry.value) << '\n';
}

bool operator==(const NormalizationTable& a, const NormalizationTable& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (const auto& [key, entry] : a.entries_) {
    const auto* other = b.find(key.first, key.second);
    if (!other || other->value != entry.value) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// KTable

KTable::KTable(const KTable& other) : entries_(other.snapshot()) {}

KTable& KTable::operator=(const KTable& other) {
  if (this != &other) {
    auto copy = other.snapshot();
    std::lock_guard lock(mutex_);
    entries_ = std::move(copy);
  }
  return *this;
}

KTable KTable::parse(std::istream& in, KSource source) {
  KTable t;
  for (auto& line : parse_table_lines(in)) t.entries_[{line.d, line.index}] = {line.value, source};
  return t;
}

KTable KTable::load(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse(in);
}

std::optional<KEntry> KTable::find(int d, int lambda) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find({d, lambda});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool KTable::insert(int d, int lambda, KEntry entry) {
  std::lock_guard lock(mutex_);
  return entries_.emplace(DegreeOrder{d, lambda}, std::move(entry)).second;
}

std::map<DegreeOrder, KEntry> KTable::snapshot() const {
  std::lock_guard lock(mutex_);
  return entries_;
}

bool KTable::empty() const {
  std::lock_guard lock(mutex_);
  return entries_.empty();
}

// ---------------------------------------------------------------------------
// Recursion

Rational alpha_factor(int d1, int b1, int d2, int b2) {
  const long den = 3L * d2 * (3L * d2 - 1 - b2);
  if (den == 0) return 0;
  Rational r(Integer((3L * d1 - 2L * b1) * (3L * d2 - 2L * b2) * (3L * d2 - 1)), Integer(den));
  r.canonicalize();
  return r;
}

std::optional<Rational> k_base_case(int d, int lambda) {
  if (d == 1 && (lambda == 0 || lambda == 1)) return Rational(1);
  if (d == 2 && lambda == 3) return Rational(Integer(3), Integer(4));
  return std::nullopt;
}

void check_k_integrality(int d, int lambda, const Rational& k) {
  const bool boundary = 2 * lambda == 3 * d;
  const Rational probe = boundary ? Rational(k * 4) : k;
  if (!is_integer(probe))
    throw CalibrationMismatch("K_" + std::to_string(d) + "^" + std::to_string(lambda) + " = " +
                              to_fraction_string(k) +
                              (boundary ? " is not a quarter-integer" : " is not an integer"));
}

KCoefficientEngine::KCoefficientEngine(NormalizationTable f, KTable overrides)
    : f_(std::move(f)), overrides_(std::move(overrides)) {}

Rational KCoefficientEngine::f_required(int d, int b) const {
  auto v = f_.value(d, b);
  if (!v) throw UnknownNormalization(d, b);
  return *v;
}

Rational KCoefficientEngine::k_or_zero(int d, int b) const {
  if (2 * b > 3 * d) return 0;
  return coefficient(d, b).value;
}

KEntry KCoefficientEngine::coefficient(int d, int lambda) const {
  if (d < 1 || lambda < 0 || 2 * lambda > 3 * d)
    throw RangeError("K_" + std::to_string(d) + "^" + std::to_string(lambda) +
                     " requires d >= 1 and 0 <= 2*lambda <= 3*d");
  if (auto base = k_base_case(d, lambda)) return {*base, KSource::base_case};
  if (auto hit = overrides_.find(d, lambda)) {
    check_k_integrality(d, lambda, hit->value);
    return *hit;
  }
  if (auto hit = cache_.find(d, lambda)) return *hit;

  const Rational f = f_required(d, lambda);
  if (f == 0)
    throw ZeroNormalization("f_" + std::to_string(d) + "^(" + std::to_string(lambda) +
                            ") is zero; K is not determined by the recursion");
  Rational k = recursion_rhs(d, lambda) / f;
  check_k_integrality(d, lambda, k);
  KEntry entry{k, KSource::recursion};
  cache_.insert(d, lambda, entry);
  return entry;
}

bool KCoefficientEngine::computable(int d, int lambda) const {
  try {
    coefficient(d, lambda);
    return true;
  } catch (const UnknownNormalization&) {
    return false;
  } catch (const ZeroNormalization&) {
    return false;
  }
}

Rational KCoefficientEngine::recursion_rhs(int d, int lambda) const {
  const int b = lambda;
  const long top = 3L * d - 4 - b;
  Rational sum = 0;
  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    for (int b1 = 0; b1 <= b; ++b1) {
      const int b2 = b - b1;
      if (2 * b1 > 3 * d1 || 2 * b2 > 3 * d2) continue;
      Rational weight = k_or_zero(d1, b1) * k_or_zero(d2, b2) * f_required(d1, b1) *
                        f_required(d2, b2);
      Integer bracket = Integer(d1 * d1 * d2 * d2) * binom(top, 3L * d1 - 2 - b1) -
                        Integer(d1 * d1 * d1 * d2) * binom(top, 3L * d1 - 1 - b1);
      sum += weight * Rational(bracket);
    }
    for (int b1 = 0; b1 <= b - 1; ++b1) {
      const int b2 = b - 1 - b1;
      if (2 * b1 > 3 * d1 || 2 * b2 > 3 * d2) continue;
      Rational weight = k_or_zero(d1, b1) * k_or_zero(d2, b2) * f_required(d1, b1) *
                        f_required(d2, b2) * alpha_factor(d1, b1, d2, b2);
      Integer bracket = Integer(2 * d1 * d2) * binom(top, 3L * d1 - 2 - b1) -
                        Integer(d1 * d1) * binom(top, 3L * d1 - 1 - b1) -
                        Integer(d2 * d2) * binom(top, 3L * d1 - 3 - b1);
      sum += weight * Rational(bracket);
    }
  }
  return sum;
}

Rational KCoefficientEngine::solve_normalization(int d, int b, const Rational& known_k) {
  if (known_k == 0) throw DivisionByZero("cannot solve f from K = 0");
  if (d < 1 || b < 0 || 2 * b > 3 * d) throw RangeError("no K coefficient at this (d, b)");
  if (k_base_case(d, b))
    throw RangeError("base case K_" + std::to_string(d) + "^" + std::to_string(b) +
                     " is not governed by the recursion");
  Rational f = recursion_rhs(d, b) / known_k;
  const auto* existing = f_.find(d, b);
  const bool changed = !existing || existing->value != f;
  f_.set(d, b, f, NormalizationSource::solved);
  if (changed) cache_ = KTable{};
  return f;
}

void KCoefficientEngine::preload(int d, int lambda, const Rational& value) {
  cache_.insert(d, lambda, {value, KSource::recursion});
}

Rational k_coefficient(int d, int lambda, const NormalizationTable& f, const KTable& overrides) {
  return KCoefficientEngine(f, overrides).k(d, lambda);
}

}  // namespace tangenttab

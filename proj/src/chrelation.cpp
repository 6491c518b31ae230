#include "tangenttab/chrelation.hpp"

#include "tangenttab/errors.hpp"
#include "tangenttab/tangency.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tangenttab {

bool ContactProfile::is_valid() const {
  return delta >= 3 && d >= 1 &&
         alpha.weight() + beta.weight() == static_cast<std::uint64_t>(d) * delta;
}

long ContactProfile::markings() const { return static_cast<long>(alpha.norm() + beta.norm()); }

std::string ContactProfile::to_string() const {
  return "d=" + std::to_string(d) + " delta=" + std::to_string(delta) + " alpha=" +
         alpha.to_string() + " beta=" + beta.to_string();
}

namespace {

IndexSequence parse_sequence(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("sequence must look like [n1,n2,...]: '" + std::string(text) + "'");
  text = text.substr(1, text.size() - 2);
  std::vector<std::uint64_t> entries;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    if (item.empty()) throw ParseError("empty sequence entry");
    for (char ch : item)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("sequence entries must be nonnegative integers: '" + std::string(item) + "'");
    entries.push_back(std::stoull(std::string(item)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw ParseError("trailing comma in sequence");
  }
  return IndexSequence(std::move(entries));
}

int parse_positive(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    int v = std::stoi(std::string(value), &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad value for " + std::string(key) + ": '" + std::string(value) + "'");
}

}  // namespace

ContactProfile parse_profile(std::string_view literal) {
  ContactProfile p;
  bool have_d = false;
  std::istringstream in{std::string(literal)};
  for (std::string token; in >> token;) {
    auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + token + "'");
    std::string_view key(token.data(), eq);
    std::string_view value(token.data() + eq + 1, token.size() - eq - 1);
    if (key == "d") {
      p.d = parse_positive(key, value);
      have_d = true;
    } else if (key == "delta") {
      p.delta = parse_positive(key, value);
    } else if (key == "alpha") {
      p.alpha = parse_sequence(value);
    } else if (key == "beta") {
      p.beta = parse_sequence(value);
    } else {
      throw ParseError("unknown profile key '" + std::string(key) + "'");
    }
  }
  if (!have_d) throw ParseError("profile literal needs d=");
  if (!p.is_valid())
    throw ParseError("profile violates I(alpha) + I(beta) = d*delta (or delta < 3): " + p.to_string());
  return p;
}

ContactProfile cubic_profile(int d, int a, int b, int c) {
  const long m = 3L * d - a - 2L * b - 2L * c;
  if (d < 1 || a < 0 || b < 0 || c < 0 || m < 0)
    throw RangeError("no cubic profile for N_" + std::to_string(d) + "(" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) + ")");
  return {3, d,
          IndexSequence{static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)},
          IndexSequence{static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(c)}};
}

// ---------------------------------------------------------------------------

void LinearCombination::add(const ContactProfile& p, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LinearCombination& LinearCombination::add_scaled(const LinearCombination& other, const Integer& scale) {
  for (const auto& [p, coeff] : other.terms_) add(p, coeff * scale);
  return *this;
}

Integer LinearCombination::coefficient(const ContactProfile& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

// ---------------------------------------------------------------------------

long expected_dimension(int delta, int d, long n) {
  if (delta < 3) throw RangeError("the divisor must have degree delta >= 3");
  if (d < 1) throw RangeError("degree must be positive");
  if (n < 0) throw RangeError("number of markings must be nonnegative");
  return static_cast<long>(d) * (3 - delta) + n - 1;
}

long free_points(const ContactProfile& p) {
  return expected_dimension(p.delta, p.d, p.markings()) - static_cast<long>(p.alpha.norm());
}

bool hypothesis_readings_disagree(const ContactProfile& p) {
  const long e = expected_dimension(p.delta, p.d, p.markings());
  return (e - static_cast<long>(p.alpha.weight()) > 0) != (e - static_cast<long>(p.alpha.norm()) > 0);
}

LinearCombination expand_once(const ContactProfile& p) {
  if (free_points(p) <= 0) throw NotReducible("no free points left: " + p.to_string());
  LinearCombination out;
  for (unsigned k = 1; k <= p.beta.max_order(); ++k) {
    if (p.beta[k] == 0) continue;
    auto e_k = IndexSequence::unit(k);
    out.add(ContactProfile{p.delta, p.d, p.alpha + e_k, p.beta - e_k}, Integer(k));
  }
  return out;
}

LinearCombination ProfileReducer::reduce(const ContactProfile& p) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
  }
  LinearCombination result;
  const long free = free_points(p);
  if (free <= 0) {
    result.add(p, 1);
  } else {
    if (p.beta.empty())
      throw std::logic_error("profile with free points but no unspecified contacts: " + p.to_string());
    const LinearCombination expansion = expand_once(p);
    for (const auto& [child, coeff] : expansion.terms()) {
      if (child.alpha.weight() + child.beta.weight() != p.alpha.weight() + p.beta.weight() ||
          child.beta.norm() + 1 != p.beta.norm())
        throw std::logic_error("expansion broke profile bookkeeping at " + p.to_string());
      result.add_scaled(reduce(child), coeff);
    }
  }
  std::lock_guard lock(mutex_);
  memo_.emplace(p, result);
  return result;
}

LinearCombination reduce_to_terminal(const ContactProfile& p) {
  static ProfileReducer reducer;
  return reducer.reduce(p);
}

Rational evaluate_cubic_profile(const ContactProfile& p, const TangencyCounter& counter) {
  if (p.delta != 3) throw NotEvaluable("closed-form values exist only for a cubic divisor");
  if (p.alpha.max_order() > 2 || p.beta.max_order() > 2)
    throw UnsupportedOrder("contacts of order >= 3 with the cubic: " + p.to_string());
  if (!p.is_valid()) throw ProfileMismatch("I(alpha) + I(beta) != 3d: " + p.to_string());
  const long a = static_cast<long>(p.alpha[1]);
  const long b = static_cast<long>(p.alpha[2]);
  const long c = static_cast<long>(p.beta[2]);
  if (static_cast<long>(p.beta[1]) != 3L * p.d - a - 2 * b - 2 * c)
    throw ProfileMismatch("transverse count inconsistent with degree: " + p.to_string());
  return counter.count(p.d, static_cast<int>(a), static_cast<int>(b), static_cast<int>(c));
}

Rational evaluate_combination(const LinearCombination& combination, const TangencyCounter& counter) {
  Rational sum = 0;
  for (const auto& [p, coeff] : combination.terms())
    sum += Rational(coeff) * evaluate_cubic_profile(p, counter);
  return sum;
}

}  // namespace tangenttab

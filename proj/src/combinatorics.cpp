#include "tangenttab/combinatorics.hpp"

#include "tangenttab/errors.hpp"

namespace tangenttab {

Integer binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

IndexSequence::IndexSequence(std::initializer_list<std::uint64_t> entries) : entries_(entries) {
  trim();
}

IndexSequence::IndexSequence(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {
  trim();
}

IndexSequence IndexSequence::unit(unsigned order) {
  if (order == 0) throw RangeError("contact orders start at 1");
  IndexSequence e;
  e.set(order, 1);
  return e;
}

std::uint64_t IndexSequence::operator[](unsigned order) const {
  if (order == 0 || order > entries_.size()) return 0;
  return entries_[order - 1];
}

void IndexSequence::set(unsigned order, std::uint64_t count) {
  if (order == 0) throw RangeError("contact orders start at 1");
  if (order > entries_.size()) {
    if (count == 0) return;
    entries_.resize(order, 0);
  }
  entries_[order - 1] = count;
  trim();
}

std::uint64_t IndexSequence::norm() const {
  std::uint64_t n = 0;
  for (auto v : entries_) n += v;
  return n;
}

std::uint64_t IndexSequence::weight() const {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) w += (i + 1) * entries_[i];
  return w;
}

Integer IndexSequence::factorial() const {
  Integer f = 1;
  for (auto v : entries_) f *= tangenttab::factorial(v);
  return f;
}

IndexSequence& IndexSequence::operator+=(const IndexSequence& other) {
  if (other.entries_.size() > entries_.size()) entries_.resize(other.entries_.size(), 0);
  for (std::size_t i = 0; i < other.entries_.size(); ++i) entries_[i] += other.entries_[i];
  trim();
  return *this;
}

IndexSequence operator-(const IndexSequence& lhs, const IndexSequence& rhs) {
  IndexSequence out = lhs;
  if (rhs.entries_.size() > out.entries_.size()) out.entries_.resize(rhs.entries_.size(), 0);
  for (std::size_t i = 0; i < rhs.entries_.size(); ++i) {
    if (out.entries_[i] < rhs.entries_[i]) throw RangeError("negative entry in sequence difference");
    out.entries_[i] -= rhs.entries_[i];
  }
  out.trim();
  return out;
}

std::string IndexSequence::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + "]";
}

void IndexSequence::trim() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

SequenceStats seq_stats(const IndexSequence& alpha) {
  return {alpha.norm(), alpha.weight(), alpha.factorial()};
}

Rational forward_difference(const std::function<Rational(long)>& values, long t) {
  return values(t + 1) - values(t);
}

}  // namespace tangenttab

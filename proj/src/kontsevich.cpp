#include "tangenttab/kontsevich.hpp"

#include "tangenttab/combinatorics.hpp"
#include "tangenttab/errors.hpp"

namespace tangenttab {

KontsevichTable::KontsevichTable() { values_.emplace(1, Integer(1)); }

KontsevichTable::KontsevichTable(const KontsevichTable& other) : values_(other.snapshot()) {}

KontsevichTable& KontsevichTable::operator=(const KontsevichTable& other) {
  if (this != &other) {
    auto copy = other.snapshot();
    std::lock_guard lock(mutex_);
    values_ = std::move(copy);
  }
  return *this;
}

std::optional<Integer> KontsevichTable::find(int d) const {
  std::lock_guard lock(mutex_);
  auto it = values_.find(d);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

bool KontsevichTable::insert(int d, const Integer& value) {
  std::lock_guard lock(mutex_);
  return values_.emplace(d, value).second;
}

std::map<int, Integer> KontsevichTable::snapshot() const {
  std::lock_guard lock(mutex_);
  return values_;
}

Integer kontsevich_kernel(int k, int l, const Integer& n_k, const Integer& n_l) {
  const int d = k + l;
  Integer bracket = l * binom(3 * d - 4, 3 * k - 2) - k * binom(3 * d - 4, 3 * k - 1);
  return n_k * n_l * k * k * l * bracket;
}

Integer kontsevich_number(int d, KontsevichTable& table) {
  if (d < 1) throw RangeError("degree must be positive");
  if (auto hit = table.find(d)) return *hit;
  // Fill bottom-up so the recursion depth stays constant.
  for (int e = 2; e <= d; ++e) {
    if (table.find(e)) continue;
    Integer sum = 0;
    for (int k = 1; k < e; ++k)
      sum += kontsevich_kernel(k, e - k, *table.find(k), *table.find(e - k));
    table.insert(e, sum);
  }
  return *table.find(d);
}

Integer kontsevich_number(int d) {
  static KontsevichTable table;
  return kontsevich_number(d, table);
}

}  // namespace tangenttab

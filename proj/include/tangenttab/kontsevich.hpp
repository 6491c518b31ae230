#pragma once

#include "tangenttab/numeric.hpp"

#include <map>
#include <mutex>
#include <optional>

namespace tangenttab {

/// Append-only memo of N_d, the number of rational degree-d plane curves
/// through 3d-1 general points. Safe for concurrent use: lookups and inserts
/// are serialized, computation is not, and racing computations of the same
/// entry produce identical values.
class KontsevichTable {
 public:
  KontsevichTable();

  KontsevichTable(const KontsevichTable& other);
  KontsevichTable& operator=(const KontsevichTable& other);

  std::optional<Integer> find(int d) const;
  /// Inserts if absent. Returns false (and leaves the table unchanged) if the
  /// degree was already present.
  bool insert(int d, const Integer& value);

  std::map<int, Integer> snapshot() const;

 private:
  mutable std::mutex mutex_;
  std::map<int, Integer> values_;
};

/// N_d via the quadratic recursion seeded with N_1 = 1. Populates `table` for
/// every degree <= d. Throws RangeError for d < 1.
Integer kontsevich_number(int d, KontsevichTable& table);

/// Convenience overload backed by a process-wide table.
Integer kontsevich_number(int d);

/// One term of the recursion for the split d = k + l.
Integer kontsevich_kernel(int k, int l, const Integer& n_k, const Integer& n_l);

}  // namespace tangenttab

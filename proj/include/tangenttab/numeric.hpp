#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tangenttab {

using Integer = mpz_class;
using Rational = mpq_class;

/// `num/den` in lowest terms with positive denominator.
std::string to_fraction_string(const Rational& q);

/// Accepts `num/den` or a bare integer. Throws ParseError on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer pow2(unsigned long e);

}  // namespace tangenttab

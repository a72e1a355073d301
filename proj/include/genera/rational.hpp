#pragma once

#include <gmpxx.h>

#include <string>

namespace genera {

using Rational = mpq_class;

/// mpq_class(n, d) does not reduce; every construction from a pair goes
/// through here so elements stay canonical.
inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "n" or "n/d" with optional sign. Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational rat_from_string(const std::string& text);

/// Renders as "n/d" with the denominator always present ("0/1", "-3/2").
std::string rat_to_fraction_string(const Rational& q);

/// Renders as "n" when the denominator is 1, else "n/d".
inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

} // namespace genera

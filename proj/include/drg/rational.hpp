#pragma once

// Exact rational arithmetic used throughout the library. Every bound in
// this domain is a strict or non-strict inequality between rationals, so
// boundary cases must be decided exactly; nothing here uses floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace drg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Exact integer value; q must be an integer.
inline Int to_int(const Rat& q) { return numerator(q); }

/// Largest integer <= q.
inline Int floor_rat(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

/// q^e for integer e >= 0.
inline Rat pow_rat(const Rat& q, unsigned e) {
    Rat acc = 1;
    for (unsigned i = 0; i < e; ++i) acc *= q;
    return acc;
}

/// Binomial coefficient C(n, k) for small k, exact.
inline Rat binom2(const Rat& n) { return n * (n - 1) / 2; }

/// "p/q" (no whitespace) or a plain integer literal; nullopt on junk.
std::optional<Rat> parse_rational(const std::string& text);

/// Canonical text form: "p/q" when the denominator is not 1, else "p".
std::string rat_str(const Rat& q);

}  // namespace drg

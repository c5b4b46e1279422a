#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ccert {

// Exact rational scalar. All arithmetic in the library is over Rat; no
// floating point enters any predicate. GMP keeps values in lowest terms
// with a positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign(const Rat& r) { return sgn(r); }

// Canonical rational from a numerator/denominator pair. Throws on zero
// denominator.
Rat make_rat(const Int& num, const Int& den);

// Accepts "p", "p/q" (q > 0) and decimal strings like "-1.25", converted
// exactly. Throws std::invalid_argument on anything else.
Rat rat_from_string(const std::string& text);

// Lowest-terms text form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

// Fixed-point decimal with `digits` fractional digits, rounded toward zero.
// Exact integer arithmetic; used for SVG coordinates.
std::string rat_to_decimal(const Rat& r, int digits);

// Exact square root when r is a perfect square of a rational, else nullopt.
std::optional<Rat> rat_sqrt(const Rat& r);

}  // namespace ccert

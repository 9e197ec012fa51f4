#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace momentsos {

/// Exact rational scalar used throughout the modeling layer.
/// Conversion to double happens only at solve/export time.
using Rat = mpq_class;

inline int sign(const Rat& q) { return sgn(q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// q^e for e >= 0.
Rat rat_pow(const Rat& base, unsigned long e);

/// Exact conversion of a double (doubles are dyadic rationals).
Rat rat_of_double(double d);

/// Nearest-representable double for q (GMP rounds toward zero; the error is
/// below one ulp, which is fine for the float consumers here).
inline double to_double(const Rat& q) { return q.get_d(); }

/// Parses "3", "-7/2", "0.125", "1e-8", "2.5e3" into an exact rational.
/// Decimal and scientific forms are read digit-exactly (1e-8 -> 1/100000000).
/// Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

/// Canonical text form: "num" or "num/den" with positive denominator.
std::string format_rational(const Rat& q);

}  // namespace momentsos

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qspivey {

/// Arbitrary-precision signed integer. Every integer quantity in the library
/// (coefficients, binomials, Bell and Dowling numbers) is carried as BigInt.
using BigInt = mpz_class;

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }

/// Canonical decimal rendering: optional '-', no leading zeros, "0" for zero.
inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Parses the canonical decimal form produced by to_decimal.
/// Throws std::invalid_argument on anything else ("+1", "007", "-0", "1e3").
BigInt parse_decimal(std::string_view text);

/// v^e with 0^0 = 1.
BigInt pow(const BigInt& v, unsigned long e);

}  // namespace qspivey

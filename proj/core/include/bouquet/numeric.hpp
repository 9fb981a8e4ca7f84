#pragma once

#include <gmpxx.h>

#include <string>

namespace bouquet {

/// Exact integer used for traces, Lefschetz numbers and fixed-point counts.
using BigInt = mpz_class;

/// Exact rational used by the piecewise-linear oracle.
using Rational = mpq_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

/// `p/q` notation, always with an explicit denominator.
inline std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

/// Natural logarithm of a positive big integer without overflowing a double.
double log_abs(const BigInt& value);

}  // namespace bouquet

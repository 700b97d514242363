#ifndef FACTOPROD_EXACT_HPP
#define FACTOPROD_EXACT_HPP

#include <gmpxx.h>

#include <string>

namespace factoprod {

// Universal scalar: arbitrary-precision signed integer. Coefficients exceed
// 64-bit range well before k = 16, so everything is computed over Int.
using Int = mpz_class;

// Exact rational, used only by the symmetric-elimination code in
// matrix_analysis. Kept canonical (gcd 1, positive denominator) by GMP.
using Rat = mpq_class;

/// n! for n >= 0.
Int factorial(unsigned long n);

/// Binomial coefficient C(n, r). Returns 0 when r < 0 or r > n; every
/// summation formula in the coefficient engine relies on that convention.
/// Throws std::invalid_argument for n < 0.
Int binomial(long n, long r);

/// Falling factorial power x(x-1)...(x-k+1) for k >= 1. x may be negative.
Int falling_factorial(const Int& x, unsigned long k);

/// Decimal-string serialization, the wire format for all JSON output.
std::string to_decimal(const Int& v);

/// Inverse of to_decimal. Throws std::invalid_argument on malformed input.
Int int_from_decimal(const std::string& s);

}  // namespace factoprod

#endif  // FACTOPROD_EXACT_HPP

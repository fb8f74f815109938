#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace smyth {

// mpq_class keeps values canonical (reduced, positive denominator) after every
// arithmetic operation as long as construction goes through canonicalize().
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

/// "num/den", or "num" when den == 1.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Accepts "p", "-p", "p/q" with optional surrounding whitespace; throws kParse.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "3/2,2,5/2".
std::vector<Rational> parse_rational_list(std::string_view text);

bool is_integer(const Rational& x);
BigInt lcm_of_denominators(const std::vector<Rational>& xs);
BigInt gcd_of(const std::vector<BigInt>& xs);

/// Throws kDomain if x does not fit.
std::int64_t to_int64(const BigInt& x);
double to_double(const Rational& x);

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational best_approximation(double x, const BigInt& max_den);

}  // namespace smyth

#pragma once

#include <optional>
#include <vector>

#include "smyth/rational.hpp"

namespace smyth {

/// v_p(x); std::nullopt stands for +infinity (x == 0). Throws kDomain if p is not prime.
std::optional<long> padic_valuation(const Rational& x, const BigInt& p);
std::optional<long> padic_valuation(const BigInt& x, const BigInt& p);

bool is_prime(const BigInt& n);

/// Distinct prime factors of |n| in ascending order; empty for |n| <= 1.
/// Trial division up to 10^6, Pollard-Brent rho beyond.
std::vector<BigInt> prime_factors(const BigInt& n);

}  // namespace smyth

#include "smyth/number_theory.hpp"

#include <algorithm>

#include "smyth/error.hpp"

namespace smyth {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

void require_prime(const BigInt& p) {
  if (!is_prime(p)) fail(ErrorCode::kDomain, to_string(p) + " is not prime");
}

long remove_factor(BigInt x, const BigInt& p) {
  if (x < 0) x = -x;
  return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

// Pollard rho with Brent's cycle detection; returns a nontrivial factor of composite n.
BigInt rho_factor(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](const BigInt& v) {
      BigInt out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          BigInt diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::vector<BigInt>& out) {
  if (n <= 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const BigInt d = rho_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::optional<long> padic_valuation(const BigInt& x, const BigInt& p) {
  require_prime(p);
  if (x == 0) return std::nullopt;
  return remove_factor(x, p);
}

std::optional<long> padic_valuation(const Rational& x, const BigInt& p) {
  require_prime(p);
  if (x == 0) return std::nullopt;
  return remove_factor(x.get_num(), p) - remove_factor(x.get_den(), p);
}

std::vector<BigInt> prime_factors(const BigInt& n) {
  BigInt m = abs(n);
  std::vector<BigInt> out;
  if (m <= 1) return out;
  for (unsigned long d = 2; d <= kTrialLimit; d += (d == 2 ? 1 : 2)) {
    if (BigInt(d) * d > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      out.emplace_back(d);
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) m /= d;
    }
  }
  if (m > 1) factor_into(m, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace smyth

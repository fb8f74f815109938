#include "smyth/rational.hpp"

#include <cmath>
#include <limits>

#include "smyth/error.hpp"

namespace smyth {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::kDomain, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) fail(ErrorCode::kParse, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') fail(ErrorCode::kParse, "malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) fail(ErrorCode::kParse, "empty rational");
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, s));
  const BigInt num = parse_integer(trim(s.substr(0, slash)), s);
  const BigInt den = parse_integer(trim(s.substr(slash + 1)), s);
  if (den == 0) fail(ErrorCode::kParse, "zero denominator in '" + std::string(s) + "'");
  return make_rational(num, den);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

BigInt lcm_of_denominators(const std::vector<Rational>& xs) {
  BigInt l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

BigInt gcd_of(const std::vector<BigInt>& xs) {
  BigInt g = 0;
  for (const auto& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::int64_t to_int64(const BigInt& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t())) fail(ErrorCode::kDomain, "integer " + x.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(x.get_si());
}

double to_double(const Rational& x) { return x.get_d(); }

Rational best_approximation(double x, const BigInt& max_den) {
  if (!std::isfinite(x)) fail(ErrorCode::kDomain, "cannot rationalize a non-finite value");
  // Exact binary value of x, then continued-fraction convergents.
  Rational target(x);
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest = target;
  for (int iter = 0; iter < 4096; ++iter) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    const BigInt p2 = a * p1 + p0;
    const BigInt q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Semiconvergent with the largest admissible step, if it beats p1/q1.
      const BigInt k = (max_den - q0) / q1;
      const Rational semi = make_rational(k * p1 + p0, k * q1 + q0);
      const Rational conv = make_rational(p1, q1);
      Rational ds = semi - target, dc = conv - target;
      return abs(ds) < abs(dc) ? semi : conv;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return make_rational(p1, q1);
}

}  // namespace smyth

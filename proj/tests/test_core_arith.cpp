#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "common.hpp"
#include "smyth/error.hpp"
#include "smyth/linear_algebra.hpp"
#include "smyth/number_theory.hpp"
#include "smyth/rational.hpp"

using namespace smyth;
using smyth::test::uniform;

namespace {

Rational random_rational() {
  long d = uniform(1, 30);
  return make_rational(uniform(-50, 50), d);
}

// Cofactor expansion along the first row.
Rational cofactor_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Rational term = m(0, j) * cofactor_det(minor);
    s += (j % 2 == 0) ? term : Rational(-term);
  }
  return s;
}

// Is x an integer combination of the rows of b? Brute force over small multipliers
// when rank is 1 or 2 (enough for n <= 3 fixtures), after a rational solve.
bool in_row_lattice(const IntMatrix& b, const std::vector<long>& x) {
  // Solve c^T b = x over Q via the transposed system, then check integrality.
  RatMatrix bt = to_rational(b).transpose();
  std::vector<Rational> rhs;
  for (long v : x) rhs.emplace_back(v);
  auto sol = solve_linear(bt, rhs);
  if (!sol) return false;
  if (!sol->kernel.empty()) return false;  // rows independent, so unique
  return std::all_of(sol->particular.begin(), sol->particular.end(), [](const Rational& q) { return is_integer(q); });
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational(" -10/5 ")) == "-2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  const auto xs = parse_rational_list("3/2,2,5/2");
  REQUIRE(xs.size() == 3);
  CHECK(xs[0] == make_rational(3, 2));
  for (int k = 0; k < 500; ++k) {
    const Rational x = random_rational(), y = random_rational();
    CHECK((x + y) - y == x);
    const Rational z = x * y;
    CHECK(gcd(z.get_num(), z.get_den()) == 1);
    CHECK(z.get_den() > 0);
  }
}

TEST_CASE("padic valuation") {
  CHECK(padic_valuation(Rational(12), BigInt(2)) == 2);
  CHECK(padic_valuation(make_rational(4, 9), BigInt(3)) == -2);
  CHECK_FALSE(padic_valuation(Rational(0), BigInt(5)).has_value());
  CHECK_THROWS_AS(padic_valuation(Rational(12), BigInt(4)), Error);
  const long primes[] = {2, 3, 5, 7, 11};
  for (int k = 0; k < 500; ++k) {
    Rational x = random_rational(), y = random_rational();
    if (x == 0 || y == 0) continue;
    for (long p : primes) {
      const auto vx = padic_valuation(x, BigInt(p)), vy = padic_valuation(y, BigInt(p));
      CHECK(padic_valuation(Rational(x * y), BigInt(p)) == *vx + *vy);
    }
  }
}

TEST_CASE("prime factors") {
  CHECK(prime_factors(BigInt(60)) == std::vector<BigInt>{2, 3, 5});
  CHECK(prime_factors(BigInt(1)).empty());
  CHECK(prime_factors(BigInt(-17 * 19)) == std::vector<BigInt>{17, 19});
  // Needs rho: product of two primes above 10^6.
  const BigInt p("1000003"), q("1000033");
  CHECK(prime_factors(p * q) == std::vector<BigInt>{p, q});
  for (long n = 2; n < 2000; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) prime = false;
    CHECK(is_prime(BigInt(n)) == prime);
  }
}

TEST_CASE("hnf kernel basis spans the kernel") {
  {
    const std::vector<BigInt> a{1, -1};
    const IntMatrix b = hnf_kernel_basis(a);
    REQUIRE(b.rows() == 1);
    CHECK(b(0, 0) == 1);
    CHECK(b(0, 1) == 1);
  }
  for (auto av : {std::vector<long>{3, 4, 5}, std::vector<long>{1, 1, 1}, std::vector<long>{17, 19, 29},
                  std::vector<long>{2, -6, 3}}) {
    std::vector<BigInt> a(av.begin(), av.end());
    const IntMatrix b = hnf_kernel_basis(a);
    REQUIRE(b.rows() == 2);
    REQUIRE(b.cols() == 3);
    for (std::size_t r = 0; r < 2; ++r) CHECK(a[0] * b(r, 0) + a[1] * b(r, 1) + a[2] * b(r, 2) == 0);
    // Exhaustive membership over the box [-10, 10]^3.
    for (long x = -10; x <= 10; ++x)
      for (long y = -10; y <= 10; ++y)
        for (long z = -10; z <= 10; ++z)
          if (av[0] * x + av[1] * y + av[2] * z == 0) CHECK(in_row_lattice(b, {x, y, z}));
  }
  CHECK_THROWS_AS(hnf_kernel_basis(std::vector<BigInt>{0, 0}), Error);
}

TEST_CASE("determinant matches cofactor expansion exhaustively up to 3x3 and sampled 4x4") {
  CHECK(determinant(RatMatrix::identity(5)) == 1);
  CHECK(determinant(RatMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(RatMatrix{{3, 4}, {5, 7}}) == 1);
  CHECK_THROWS_AS(determinant(RatMatrix(2, 3)), Error);
  // All 1x1, 2x2 and 3x3 matrices with entries in {-2..2}.
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t cells = n * n;
    std::size_t total = 1;
    for (std::size_t k = 0; k < cells; ++k) total *= 5;
    for (std::size_t code = 0; code < total; ++code) {
      RatMatrix m(n, n);
      std::size_t c = code;
      for (std::size_t k = 0; k < cells; ++k, c /= 5) m(k / n, k % n) = static_cast<long>(c % 5) - 2;
      REQUIRE(determinant(m) == cofactor_det(m));
    }
  }
  // 4x4: 5^16 is too many for a unit test; 20000 random ones plus all 0/1 matrices.
  for (int t = 0; t < 20000; ++t) {
    RatMatrix m(4, 4);
    for (std::size_t k = 0; k < 16; ++k) m(k / 4, k % 4) = uniform(-2, 2);
    REQUIRE(determinant(m) == cofactor_det(m));
  }
  for (std::size_t code = 0; code < (1u << 16); ++code) {
    RatMatrix m(4, 4);
    for (std::size_t k = 0; k < 16; ++k) m(k / 4, k % 4) = static_cast<long>((code >> k) & 1);
    REQUIRE(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("integer determinant agrees with rational one") {
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 6));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(-9, 9);
    CHECK(Rational(determinant(m)) == determinant(to_rational(m)));
  }
}

TEST_CASE("positive definiteness against leading principal minors") {
  CHECK(is_positive_definite(RatMatrix::identity(2)));
  CHECK_FALSE(is_positive_definite(RatMatrix{{1, 2}, {2, 1}}));
  CHECK(is_positive_definite(RatMatrix{{2, 1}, {1, 2}}));
  CHECK_THROWS_AS(is_positive_definite(RatMatrix{{1, 2}, {0, 1}}), Error);
  int positives = 0;
  for (int t = 0; t < 2000; ++t) {
    RatMatrix q(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) {
        Rational v = random_rational();
        if (i == j) v = abs(v) * 3 + make_rational(uniform(0, 3), 2);
        q(i, j) = v;
        q(j, i) = v;
      }
    // Minors computed by cofactor expansion, not by the library.
    bool all_positive = true;
    for (std::size_t k = 1; k <= 4; ++k) {
      RatMatrix s(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) s(i, j) = q(i, j);
      if (cofactor_det(s) <= 0) all_positive = false;
    }
    positives += all_positive;
    REQUIRE(is_positive_definite(q) == all_positive);
  }
  CHECK(positives > 100);
  CHECK(positives < 1900);
}

TEST_CASE("solve_linear") {
  {
    const std::vector<Rational> b{make_rational(1, 2), 3, -7};
    auto s = solve_linear(RatMatrix::identity(3), b);
    REQUIRE(s);
    CHECK(s->particular == b);
    CHECK(s->kernel.empty());
  }
  {
    auto s = solve_linear(RatMatrix{{1, 1}}, std::vector<Rational>{0});
    REQUIRE(s);
    REQUIRE(s->kernel.size() == 1);
    const auto& k = s->kernel[0];
    CHECK(k[0] + k[1] == 0);
    CHECK(k[0] != 0);
  }
  CHECK_FALSE(solve_linear(RatMatrix{{1}, {1}}, std::vector<Rational>{1, 2}));
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = static_cast<std::size_t>(uniform(1, 4)), c = static_cast<std::size_t>(uniform(1, 4));
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(-2, 2);
    std::vector<Rational> x(c);
    for (auto& v : x) v = random_rational();
    const auto b = multiply(m, x);
    auto s = solve_linear(m, b);
    REQUIRE(s);
    CHECK(multiply(m, s->particular) == b);
    for (const auto& k : s->kernel) CHECK(multiply(m, k) == std::vector<Rational>(r, 0));
  }
}

TEST_CASE("inverse and ldlt") {
  for (int t = 0; t < 200; ++t) {
    RatMatrix q(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        Rational v = random_rational();
        if (i == j) v = abs(v) + 60;
        q(i, j) = v;
        q(j, i) = v;
      }
    CHECK(q * inverse(q) == RatMatrix::identity(3));
    auto f = ldlt(q);
    REQUIRE(f);
    RatMatrix d(3, 3);
    for (std::size_t i = 0; i < 3; ++i) d(i, i) = f->diagonal[i];
    CHECK(f->upper.transpose() * d * f->upper == q);
  }
}

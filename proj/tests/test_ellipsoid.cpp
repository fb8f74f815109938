#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "common.hpp"
#include "smyth/ellipsoid.hpp"
#include "smyth/error.hpp"
#include "smyth/lattice.hpp"
#include "smyth/linear_algebra.hpp"

using namespace smyth;
using smyth::test::coeffs;

namespace {

const std::vector<std::vector<long>> kSolvable = {{3, 4, 5},       {17, 19, 29},   {5, 6, 7},      {1, 1, 1},
                                                  {2, 3, 5, 7},    {1, 1, 1, 1},   {1, 2, 3, 4, 5}, {1, 1, 1, 1, 1},
                                                  {-3, 4, 5},      {1, 1, 2, 3}};

Rational q_value(const RatMatrix& q, const std::vector<std::int64_t>& c) {
  std::vector<Rational> x(c.begin(), c.end());
  return bilinear(q, x, x);
}

// Every integer point of the box |c_k| <= D sqrt((Q^-1)_kk) with c^T Q c <= D^2.
std::set<std::vector<std::int64_t>> brute_shell(const RatMatrix& q, const Rational& d) {
  const RatMatrix p = inverse(q);
  const std::size_t r = q.rows();
  std::vector<std::int64_t> bound(r);
  for (std::size_t k = 0; k < r; ++k)
    bound[k] = static_cast<std::int64_t>(std::floor(to_double(d) * std::sqrt(to_double(p(k, k))))) + 1;
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> c(r);
  for (std::size_t k = 0; k < r; ++k) c[k] = -bound[k];
  while (true) {
    if (q_value(q, c) <= d * d) out.insert(c);
    std::size_t k = 0;
    while (k < r && ++c[k] > bound[k]) c[k] = -bound[k], ++k;
    if (k == r) break;
  }
  return out;
}

}  // namespace

TEST_CASE("hyperplane lattice") {
  {
    const auto m = hyperplane_lattice(coeffs({1, -1}));
    REQUIRE(m.rank() == 1);
    CHECK(m.forms[0] == std::vector<std::int64_t>{1});
    CHECK(m.forms[1] == std::vector<std::int64_t>{1});
  }
  {
    const auto m = hyperplane_lattice(coeffs({3, 4, 5}));
    for (std::size_t i = 0; i < 3; ++i) {
      long g = 0;
      for (auto x : m.forms[i]) g = std::gcd(g, static_cast<long>(x));
      CHECK(g == 1);
      CHECK(m.form_content(i) == 1);
    }
  }
  {
    const auto m = hyperplane_lattice(coeffs({1, 2, 2}));
    CHECK(m.form_content(0) == 2);
    CHECK(m.form_content(1) == 1);
    CHECK(m.form_content(2) == 1);
  }
  // sum a_i L_i = 0 as forms, and the forms have full rank n - 1.
  for (const auto& a : kSolvable) {
    const auto m = hyperplane_lattice(coeffs(a));
    const std::size_t n = a.size();
    RatMatrix f(n, n - 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k + 1 < n; ++k) f(i, k) = m.forms[i][k];
    for (std::size_t k = 0; k + 1 < n; ++k) {
      long s = 0;
      for (std::size_t i = 0; i < n; ++i) s += a[i] * m.forms[i][k];
      CHECK(s == 0);
    }
    CHECK(kernel_basis(f).empty());
    // Solvable everywhere, so each L_i(Lambda) = Z.
    for (std::size_t i = 0; i < n; ++i) CHECK(m.form_content(i) == 1);
  }
}

TEST_CASE("dual constrained form is exactly positive definite with equal dual values") {
  for (const auto& a : kSolvable) {
    CAPTURE(a.size());
    const auto m = hyperplane_lattice(coeffs(a));
    const auto e = dual_constrained_form(m);
    CHECK(verify_dual_form(m, e));
    // Independent recomputation: P from Q by solving, minors by determinant.
    const RatMatrix p = inverse(e.q);
    CHECK(e.q * p == RatMatrix::identity(e.q.rows()));
    for (const auto& minor : leading_principal_minors(p)) CHECK(minor > 0);
    CHECK(e.mu_sq == 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::vector<Rational> l(m.forms[i].begin(), m.forms[i].end());
      CHECK(bilinear(p, l, l) == e.mu_sq);
    }
  }
  CHECK_THROWS_AS(dual_constrained_form(hyperplane_lattice(coeffs({1, 1, 2}))), Error);
  CHECK_THROWS_AS(dual_constrained_form(hyperplane_lattice(coeffs({1, 2, 2}))), Error);
  CHECK_THROWS_AS(dual_constrained_form(hyperplane_lattice(coeffs({1, -1}))), Error);
}

TEST_CASE("shell enumeration matches brute force") {
  for (const auto& a : std::vector<std::vector<long>>{{3, 4, 5}, {5, 6, 7}, {1, 1, 1}, {2, 3, 5, 7}, {1, 1, 1, 1}}) {
    const auto m = hyperplane_lattice(coeffs(a));
    const auto e = dual_constrained_form(m);
    for (const Rational d : {Rational(1, 2), Rational(3), Rational(7, 2), Rational(9)}) {
      const auto shell = enumerate_shell(m, e, d);
      CHECK(validate_shell(m, shell));
      std::set<std::vector<std::int64_t>> got;
      for (std::size_t k = 0; k < shell.size(); ++k) {
        const auto pt = shell.point(k);
        got.emplace(pt.begin(), pt.end());
      }
      CHECK(got.size() == shell.size());
      CHECK(got == brute_shell(e.q, d));
    }
    // Euclidean gram too.
    const auto g = euclidean_gram(m);
    const auto shell = enumerate_shell(m, g, Rational(6));
    std::set<std::vector<std::int64_t>> got;
    for (std::size_t k = 0; k < shell.size(); ++k) {
      const auto pt = shell.point(k);
      got.emplace(pt.begin(), pt.end());
    }
    CHECK(got == brute_shell(g, Rational(6)));
  }
}

TEST_CASE("shell invariants checked directly") {
  const auto a = std::vector<long>{17, 19, 29};
  const auto m = hyperplane_lattice(coeffs(a));
  const auto e = dual_constrained_form(m);
  const auto shell = enumerate_shell(m, e, Rational(30));
  std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> by_point;
  std::set<std::vector<std::int64_t>> tuples;
  for (std::size_t k = 0; k < shell.size(); ++k) {
    const auto pt = shell.point(k);
    const auto v = shell.values(k);
    long s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += a[i] * v[i];
    CHECK(s == 0);
    by_point[{pt.begin(), pt.end()}] = {v.begin(), v.end()};
    tuples.emplace(v.begin(), v.end());
  }
  CHECK(tuples.size() == shell.size());
  for (const auto& [pt, v] : by_point) {
    std::vector<std::int64_t> neg(pt.size()), vneg(v.size());
    for (std::size_t k = 0; k < pt.size(); ++k) neg[k] = -pt[k];
    for (std::size_t k = 0; k < v.size(); ++k) vneg[k] = -v[k];
    REQUIRE(by_point.count(neg));
    CHECK(by_point[neg] == vneg);
  }
}

TEST_CASE("tiny dilation gives only the origin") {
  const auto m = hyperplane_lattice(coeffs({3, 4, 5}));
  const auto e = dual_constrained_form(m);
  const auto shell = enumerate_shell(m, e, Rational(1, 100));
  REQUIRE(shell.size() == 1);
  CHECK(shell.values(0)[0] == 0);
}

TEST_CASE("shell size scales like D^(n-1)") {
  for (const auto& a : std::vector<std::vector<long>>{{3, 4, 5}, {5, 6, 7}, {2, 3, 5, 7}}) {
    const auto m = hyperplane_lattice(coeffs(a));
    const auto e = dual_constrained_form(m);
    const double s1 = static_cast<double>(enumerate_shell(m, e, Rational(40)).size());
    const double s2 = static_cast<double>(enumerate_shell(m, e, Rational(80)).size());
    const double expected = std::pow(2.0, static_cast<double>(a.size() - 1));
    CHECK(s2 / s1 == doctest::Approx(expected).epsilon(0.2));
  }
}

TEST_CASE("resource cap") {
  const auto m = hyperplane_lattice(coeffs({3, 4, 5}));
  const auto e = dual_constrained_form(m);
  try {
    enumerate_shell(m, e, Rational(80), 100);
    FAIL("expected resource error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kResource);
  }
}

TEST_CASE("equal image dilation") {
  auto images_equal = [](const PointShell& s) {
    for (std::size_t i = 1; i < s.arity(); ++i)
      if (s.image(i) != s.image(0)) return false;
    return true;
  };
  {
    const auto m = hyperplane_lattice(coeffs({3, 4, 5}));
    const auto r = equal_image_dilation(m, dual_constrained_form(m), Rational(5), Rational(1000));
    CHECK(images_equal(r.shell));
    CHECK(r.dilation == 5);
  }
  {
    const auto m = hyperplane_lattice(coeffs({17, 19, 29}));
    const auto e = dual_constrained_form(m);
    const auto r = equal_image_dilation(m, e, Rational(5), Rational(1000));
    CHECK(images_equal(r.shell));
    CHECK(r.dilation == 80);  // regression fixture
    CHECK(r.attempted == std::vector<Rational>{5, 10, 20, 40, 80});
    // Earlier dilations really do differ.
    CHECK_FALSE(images_equal(enumerate_shell(m, e, Rational(40))));
  }
}

TEST_CASE("vertex count discrepancy stays bounded") {
  for (const auto& a : std::vector<std::vector<long>>{{5, 6, 7}, {3, 4, 5}}) {
    const auto m = hyperplane_lattice(coeffs(a));
    const auto e = dual_constrained_form(m);
    for (int d : {10, 20, 40, 80}) {
      const auto shell = enumerate_shell(m, e, Rational(d));
      // Direct count per value and coordinate.
      std::map<std::int64_t, std::vector<long>> count;
      for (std::size_t k = 0; k < shell.size(); ++k)
        for (std::size_t i = 0; i < 3; ++i) {
          auto& row = count[shell.values(k)[i]];
          row.resize(3);
          ++row[i];
        }
      std::uint64_t disc = 0;
      for (auto& [y, row] : count) {
        row.resize(3);
        const long mx = std::max({row[0], row[1], row[2]}), mn = std::min({row[0], row[1], row[2]});
        disc = std::max<std::uint64_t>(disc, static_cast<std::uint64_t>(mx - mn));
      }
      CHECK(vertex_count_discrepancy(shell) == disc);
      CHECK(disc <= 4);
    }
  }
}

TEST_CASE("shell csv") {
  const auto m = hyperplane_lattice(coeffs({3, 4, 5}));
  const auto shell = enumerate_shell(m, dual_constrained_form(m), Rational(1, 100));
  CHECK(shell_csv(shell) == "c1,c2,L1,L2,L3\n0,0,0,0,0\n");
}

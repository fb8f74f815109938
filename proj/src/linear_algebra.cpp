#include "smyth/linear_algebra.hpp"

#include <utility>

#include "smyth/error.hpp"

namespace smyth {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) fail(ErrorCode::kInternal, "fraction-free elimination produced an inexact quotient");
  return q;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Scale every row to integers; returns the integer matrix and the row scales.
std::pair<IntMatrix, std::vector<BigInt>> clear_row_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  std::vector<BigInt> scales(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    scales[i] = l;
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return {std::move(out), std::move(scales)};
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// Bareiss forward elimination to row echelon form; returns the pivot columns.
std::vector<std::size_t> bareiss_echelon(IntMatrix& m, std::size_t coefficient_cols) {
  std::vector<std::size_t> pivots;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < coefficient_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = exact_div(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
      }
      m(i, c) = 0;
    }
    // Rows above the pivot in skipped columns stay untouched; scale them later.
    prev = m(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix m) {
  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
    while (true) {
      // Smallest nonzero entry in column c at or below pr becomes the pivot.
      std::size_t best = m.rows();
      for (std::size_t i = pr; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        if (best == m.rows() || abs(m(i, c)) < abs(m(best, c))) best = i;
      }
      if (best == m.rows()) break;
      swap_rows(m, pr, best);
      bool done = true;
      for (std::size_t i = pr + 1; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        const BigInt q = floor_div(m(i, c), m(pr, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= q * m(pr, j);
        if (m(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(pr, c) == 0) continue;
    if (m(pr, c) < 0)
      for (std::size_t j = c; j < m.cols(); ++j) m(pr, j) = -m(pr, j);
    for (std::size_t i = 0; i < pr; ++i) {
      const BigInt q = floor_div(m(i, c), m(pr, c));
      if (q == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= q * m(pr, j);
    }
    ++pr;
  }
  return m;
}

IntMatrix hnf_kernel_basis(std::span<const BigInt> a) {
  const std::size_t n = a.size();
  if (n == 0 || gcd_of({a.begin(), a.end()}) == 0) fail(ErrorCode::kDomain, "kernel basis of the zero vector");
  if (gcd_of({a.begin(), a.end()}) != 1) fail(ErrorCode::kDomain, "kernel basis requires a primitive vector");
  // Column operations on [a; I] reduce the top row to (g, 0, ..., 0); the
  // transformed identity columns 1..n-1 then span the kernel lattice.
  std::vector<BigInt> top(a.begin(), a.end());
  IntMatrix u = IntMatrix::identity(n);
  for (std::size_t j = 1; j < n; ++j) {
    if (top[j] == 0) continue;
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), top[0].get_mpz_t(), top[j].get_mpz_t());
    const BigInt x0 = top[0] / g, xj = top[j] / g;
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt c0 = u(i, 0), cj = u(i, j);
      u(i, 0) = s * c0 + t * cj;
      u(i, j) = x0 * cj - xj * c0;
    }
    top[0] = g;
    top[j] = 0;
  }
  IntMatrix basis(n - 1, n);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) basis(k - 1, i) = u(i, k);
  return hermite_normal_form(std::move(basis));
}

BigInt determinant(const IntMatrix& m0) {
  if (!m0.square()) fail(ErrorCode::kDomain, "determinant of a non-square matrix");
  const std::size_t n = m0.rows();
  if (n == 0) return 1;
  IntMatrix m = m0;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (!m.square()) fail(ErrorCode::kDomain, "determinant of a non-square matrix");
  auto [im, scales] = clear_row_denominators(m);
  BigInt denom = 1;
  for (const auto& s : scales) denom *= s;
  return make_rational(determinant(im), denom);
}

std::optional<LinearSolution> solve_linear(const RatMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) fail(ErrorCode::kDomain, "right-hand side length mismatch");
  const std::size_t rows = m.rows(), cols = m.cols();
  RatMatrix aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
  }
  auto [im, scales] = clear_row_denominators(aug);
  const auto pivots = bareiss_echelon(im, cols);
  for (std::size_t i = pivots.size(); i < rows; ++i)
    if (im(i, cols) != 0) return std::nullopt;

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  auto back_substitute = [&](std::vector<Rational> x, bool homogeneous) {
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t c = pivots[k];
      Rational acc = homogeneous ? Rational(0) : Rational(im(k, cols));
      for (std::size_t j = c + 1; j < cols; ++j)
        if (x[j] != 0) acc -= Rational(im(k, j)) * x[j];
      x[c] = acc / Rational(im(k, c));
    }
    return x;
  };

  LinearSolution sol;
  sol.particular = back_substitute(std::vector<Rational>(cols), false);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols);
    x[f] = 1;
    sol.kernel.push_back(back_substitute(std::move(x), true));
  }
  return sol;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  std::vector<Rational> zero(m.rows());
  return solve_linear(m, zero)->kernel;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) fail(ErrorCode::kDomain, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) fail(ErrorCode::kDomain, "matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::optional<LdltFactor> ldlt(const RatMatrix& q) {
  if (!q.symmetric()) fail(ErrorCode::kDomain, "LDL^T of a non-symmetric matrix");
  const std::size_t n = q.rows();
  RatMatrix lower = RatMatrix::identity(n);
  std::vector<Rational> d(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational djj = q(j, j);
    for (std::size_t k = 0; k < j; ++k) djj -= lower(j, k) * lower(j, k) * d[k];
    d[j] = djj;
    if (j + 1 < n && djj == 0) return std::nullopt;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = q(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k) * d[k];
      lower(i, j) = s / djj;
    }
  }
  return LdltFactor{lower.transpose(), std::move(d)};
}

bool is_positive_definite(const RatMatrix& q) {
  if (!q.square() || !q.symmetric()) fail(ErrorCode::kDomain, "positive definiteness needs a symmetric matrix");
  const auto f = ldlt(q);
  if (!f) return false;  // a vanishing leading minor
  for (const auto& d : f->diagonal)
    if (d <= 0) return false;
  return true;
}

std::vector<Rational> leading_principal_minors(const RatMatrix& q) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= q.rows(); ++k) {
    RatMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = q(i, j);
    out.push_back(determinant(sub));
  }
  return out;
}

}  // namespace smyth

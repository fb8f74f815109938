#include "smyth/lattice_reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "smyth/error.hpp"

namespace smyth {

namespace {

bool mul_sub(std::int64_t& x, std::int64_t q, std::int64_t y) {
  std::int64_t p;
  if (__builtin_mul_overflow(q, y, &p)) return false;
  return !__builtin_sub_overflow(x, p, &x);
}

// x -= q * y, elementwise.
bool axpy(IntVec& x, std::int64_t q, const IntVec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] != 0 && !mul_sub(x[i], q, y[i])) return false;
  return true;
}

long double dot(const IntVec& x, const IntVec& y) {
  __int128 s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<__int128>(x[i]) * y[i];
  return static_cast<long double>(s);
}

}  // namespace

std::optional<std::vector<IntVec>> integer_kernel(const std::vector<SparseRow>& rows, std::size_t cols) {
  std::vector<IntVec> basis(cols, IntVec(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) basis[j][j] = 1;
  std::vector<std::int64_t> val;
  for (const auto& row : rows) {
    val.assign(basis.size(), 0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      __int128 s = 0;
      for (const auto& [j, c] : row) {
        if (j >= cols) fail(ErrorCode::kDomain, "row references a missing column");
        s += static_cast<__int128>(c) * basis[k][j];
      }
      if (s > INT64_MAX || s < INT64_MIN) return std::nullopt;
      val[k] = static_cast<std::int64_t>(s);
    }
    // Euclid across the vectors with a nonzero value until one is left; it is dropped.
    while (true) {
      std::size_t p = basis.size(), count = 0;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (val[k] == 0) continue;
        ++count;
        if (p == basis.size() || std::llabs(val[k]) < std::llabs(val[p])) p = k;
      }
      if (count == 0) break;
      if (count == 1) {
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(p));
        val.erase(val.begin() + static_cast<std::ptrdiff_t>(p));
        break;
      }
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == p || val[k] == 0) continue;
        const std::int64_t q = val[k] / val[p];
        if (q == 0) continue;
        if (!axpy(basis[k], q, basis[p])) return std::nullopt;
        val[k] -= q * val[p];
      }
    }
  }
  return basis;
}

bool lll_reduce(std::vector<IntVec>& b, double delta) {
  const std::size_t d = b.size();
  if (d < 2) return true;
  std::vector<std::vector<long double>> mu(d, std::vector<long double>(d, 0.0L));
  std::vector<long double> bn(d, 0.0L);
  auto gram_schmidt_row = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      long double s = dot(b[k], b[j]);
      for (std::size_t l = 0; l < j; ++l) s -= mu[j][l] * mu[k][l] * bn[l];
      mu[k][j] = s / bn[j];
    }
    long double s = dot(b[k], b[k]);
    for (std::size_t j = 0; j < k; ++j) s -= mu[k][j] * mu[k][j] * bn[j];
    bn[k] = s;
  };
  gram_schmidt_row(0);
  std::size_t k = 1;
  while (k < d) {
    gram_schmidt_row(k);
    for (std::size_t jj = k; jj-- > 0;) {
      if (std::fabs(mu[k][jj]) <= 0.5L) continue;
      const long double qf = std::round(mu[k][jj]);
      if (std::fabs(qf) > 9.0e18L) return false;
      const auto q = static_cast<std::int64_t>(qf);
      if (!axpy(b[k], q, b[jj])) return false;
      for (std::size_t l = 0; l < jj; ++l) mu[k][l] -= qf * mu[jj][l];
      mu[k][jj] -= qf;
    }
    gram_schmidt_row(k);
    if (bn[k] < (static_cast<long double>(delta) - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
      std::swap(b[k], b[k - 1]);
      gram_schmidt_row(k - 1);
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      ++k;
    }
  }
  return true;
}

std::optional<IntVec> nearest_plane(const std::vector<IntVec>& basis, std::span<const double> target) {
  const std::size_t d = basis.size();
  const std::size_t n = target.size();
  std::vector<std::vector<long double>> star(d, std::vector<long double>(n));
  std::vector<long double> bn(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (basis[i].size() != n) fail(ErrorCode::kDomain, "basis and target dimensions differ");
    for (std::size_t j = 0; j < n; ++j) star[i][j] = static_cast<long double>(basis[i][j]);
    for (std::size_t l = 0; l < i; ++l) {
      long double m = 0;
      for (std::size_t j = 0; j < n; ++j) m += static_cast<long double>(basis[i][j]) * star[l][j];
      m /= bn[l];
      for (std::size_t j = 0; j < n; ++j) star[i][j] -= m * star[l][j];
    }
    bn[i] = 0;
    for (std::size_t j = 0; j < n; ++j) bn[i] += star[i][j] * star[i][j];
  }
  std::vector<long double> t(target.begin(), target.end());
  IntVec w(n, 0);
  for (std::size_t i = d; i-- > 0;) {
    long double m = 0;
    for (std::size_t j = 0; j < n; ++j) m += t[j] * star[i][j];
    const long double qf = std::round(m / bn[i]);
    if (qf == 0) continue;
    if (std::fabs(qf) > 9.0e18L) return std::nullopt;
    const auto q = static_cast<std::int64_t>(qf);
    for (std::size_t j = 0; j < n; ++j) t[j] -= qf * static_cast<long double>(basis[i][j]);
    if (!axpy(w, -q, basis[i])) return std::nullopt;
  }
  return w;
}

}  // namespace smyth

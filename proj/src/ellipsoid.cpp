#include "smyth/ellipsoid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "smyth/error.hpp"
#include "smyth/linear_algebra.hpp"
#include "smyth/local_witness.hpp"

namespace smyth {

namespace {

using DenseD = std::vector<std::vector<double>>;

// Symmetric r x r matrices are coordinatized by their upper triangle (j <= k).
std::vector<std::pair<std::size_t, std::size_t>> sym_index(std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = j; k < r; ++k) idx.emplace_back(j, k);
  return idx;
}

RatMatrix sym_from_coords(std::span<const Rational> coords, std::size_t r) {
  RatMatrix s(r, r);
  std::size_t t = 0;
  for (const auto& [j, k] : sym_index(r)) {
    s(j, k) = coords[t];
    s(k, j) = coords[t];
    ++t;
  }
  return s;
}

bool cholesky_pd(const DenseD& a) {
  const std::size_t n = a.size();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(a[i][i]));
  if (scale == 0.0) return false;
  DenseD l(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    double d = a[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= l[j][k] * l[j][k];
    if (d <= 1e-9 * scale) return false;
    l[j][j] = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      l[i][j] = s / l[j][j];
    }
  }
  return true;
}

// Gaussian elimination with partial pivoting on a small dense system.
std::vector<double> solve_dense(DenseD a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(a[i][c]) > std::abs(a[p][c])) p = i;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    if (a[c][c] == 0.0) fail(ErrorCode::kInternal, "singular seed system");
    for (std::size_t i = c + 1; i < n; ++i) {
      const double f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

// Real dual form sum_k |Phi_k(L)|^2, where each Phi_k sends L_i to the unit
// vector b_i / a_i of one planar converse-triangle configuration.
DenseD real_seed(const LatticeModel& m) {
  const std::size_t n = m.arity(), r = m.rank();
  std::vector<double> lengths;
  for (const auto& a : m.coeffs.a()) lengths.push_back(std::abs(a.get_d()));

  // Phi = X L^T (L L^T)^{-1}; G = L L^T is fixed.
  DenseD g(r, std::vector<double>(r, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        g[j][k] += static_cast<double>(m.forms[i][j]) * static_cast<double>(m.forms[i][k]);
  DenseD g_inv(r, std::vector<double>(r));
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<double> e(r, 0.0);
    e[k] = 1.0;
    const auto col = solve_dense(g, e);
    for (std::size_t j = 0; j < r; ++j) g_inv[j][k] = col[j];
  }

  DenseD seed(r, std::vector<double>(r, 0.0));
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    const auto cfg = converse_triangle_real(std::span<const double>(lengths), 2, mask);
    std::array<std::vector<double>, 2> xl{std::vector<double>(r, 0.0), std::vector<double>(r, 0.0)};
    for (std::size_t i = 0; i < n; ++i) {
      const double a = m.coeffs[i].get_d();
      double x0, x1;
      if (a == 0.0) {
        x0 = std::cos(0.7 * static_cast<double>(mask + 1));
        x1 = std::sin(0.7 * static_cast<double>(mask + 1));
      } else {
        x0 = cfg.vectors[i][0] / a;
        x1 = cfg.vectors[i][1] / a;
      }
      for (std::size_t j = 0; j < r; ++j) {
        xl[0][j] += x0 * static_cast<double>(m.forms[i][j]);
        xl[1][j] += x1 * static_cast<double>(m.forms[i][j]);
      }
    }
    std::array<std::vector<double>, 2> phi{std::vector<double>(r, 0.0), std::vector<double>(r, 0.0)};
    for (std::size_t t = 0; t < 2; ++t)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < r; ++j) phi[t][k] += xl[t][j] * g_inv[j][k];
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) seed[j][k] += phi[0][j] * phi[0][k] + phi[1][j] * phi[1][k];
    if (cholesky_pd(seed)) {
      const double count = static_cast<double>(mask + 1);
      for (auto& row : seed)
        for (auto& x : row) x /= count;
      return seed;
    }
  }
  fail(ErrorCode::kInternal, "planar configurations did not produce a positive-definite seed");
}

}  // namespace

EllipsoidForm dual_constrained_form(const LatticeModel& m) {
  const std::size_t n = m.arity(), r = m.rank();
  if (n < 3) fail(ErrorCode::kDomain, "dual constrained form needs n >= 3");
  if (!decide(m.coeffs).solvable) fail(ErrorCode::kDomain, "local conditions fail; no ellipsoidal structure");
  if (is_real_boundary(m.coeffs))
    fail(ErrorCode::kFeasibility, "2 max|a_i| = sum|a_i|: no positive-definite form has equal dual values");

  // W = {S symmetric : L_i^T S L_i = L_0^T S L_0 for all i}.
  const auto idx = sym_index(r);
  auto quad_row = [&](std::size_t i) {
    std::vector<Rational> row;
    for (const auto& [j, k] : idx) {
      const long v = static_cast<long>(m.forms[i][j] * m.forms[i][k]);
      row.emplace_back(j == k ? v : 2 * v);
    }
    return row;
  };
  RatMatrix constraints(n - 1, idx.size());
  const auto base = quad_row(0);
  for (std::size_t i = 1; i < n; ++i) {
    const auto row = quad_row(i);
    for (std::size_t t = 0; t < idx.size(); ++t) constraints(i - 1, t) = row[t] - base[t];
  }
  const auto w_basis = kernel_basis(constraints);
  if (w_basis.empty()) fail(ErrorCode::kInternal, "equal-dual-value subspace is trivial");

  // Least-squares coordinates of the real seed in W.
  const DenseD seed = real_seed(m);
  const std::size_t dim = w_basis.size();
  DenseD gram(dim, std::vector<double>(dim, 0.0));
  std::vector<double> rhs(dim, 0.0);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const double wa = to_double(w_basis[a][t]);
      rhs[a] += wa * seed[idx[t].first][idx[t].second];
      for (std::size_t b = 0; b < dim; ++b) gram[a][b] += wa * to_double(w_basis[b][t]);
    }
  }
  const auto coords = solve_dense(gram, rhs);

  const BigInt limit = BigInt(1) << 64;
  for (BigInt bound = BigInt(1) << 16; bound <= limit; bound *= 2) {
    std::vector<Rational> sym(idx.size());
    for (std::size_t a = 0; a < dim; ++a) {
      const Rational t = best_approximation(coords[a], bound);
      if (t == 0) continue;
      for (std::size_t k = 0; k < idx.size(); ++k) sym[k] += t * w_basis[a][k];
    }
    RatMatrix p = sym_from_coords(sym, r);
    if (!is_positive_definite(p)) continue;
    const auto l0 = m.form(0);
    const Rational mu = bilinear(p, l0, l0);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) p(j, k) /= mu;
    EllipsoidForm e{inverse(p), p, Rational(1), bound};
    if (!verify_dual_form(m, e)) fail(ErrorCode::kInternal, "dual constrained form failed exact verification");
    return e;
  }
  fail(ErrorCode::kInternal, "no positive-definite rounding found up to denominator bound 2^64");
}

bool verify_dual_form(const LatticeModel& m, const EllipsoidForm& e) {
  const std::size_t r = m.rank();
  if (e.q.rows() != r || e.p.rows() != r || !e.q.symmetric() || !e.p.symmetric()) return false;
  if (e.q * e.p != RatMatrix::identity(r)) return false;
  if (e.mu_sq <= 0 || !is_positive_definite(e.p)) return false;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    const auto l = m.form(i);
    if (bilinear(e.p, l, l) != e.mu_sq) return false;
  }
  return true;
}

RatMatrix euclidean_gram(const LatticeModel& m) { return to_rational(m.basis * m.basis.transpose()); }

std::vector<std::int64_t> PointShell::image(std::size_t i) const {
  std::vector<std::int64_t> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) out.push_back(values(k)[i]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

class ShellEnumerator {
 public:
  ShellEnumerator(const LdltFactor& f, std::size_t max_points)
      : u_(f.upper), d_(f.diagonal), r_(f.diagonal.size()), max_points_(max_points), c_(r_, 0) {}

  std::vector<std::vector<std::int64_t>> run(const Rational& radius_sq) {
    if (r_ > 0) descend(r_ - 1, radius_sq);
    return std::move(points_);
  }

 private:
  bool inside(std::size_t k, long c, const Rational& center, const Rational& budget, Rational& slack) {
    Rational diff = Rational(c) - center;
    slack = budget - d_[k] * diff * diff;
    return slack >= 0;
  }

  void descend(std::size_t k, const Rational& budget) {
    Rational center = 0;
    for (std::size_t j = k + 1; j < r_; ++j)
      if (c_[j] != 0) center -= u_(k, j) * c_[j];
    const double half = std::sqrt(std::max(0.0, to_double(budget / d_[k])));
    const double mid = to_double(center);
    long lo = static_cast<long>(std::ceil(mid - half));
    long hi = static_cast<long>(std::floor(mid + half));
    Rational slack;
    while (inside(k, lo - 1, center, budget, slack)) --lo;
    while (lo <= hi && !inside(k, lo, center, budget, slack)) ++lo;
    while (inside(k, hi + 1, center, budget, slack)) ++hi;
    while (hi >= lo && !inside(k, hi, center, budget, slack)) --hi;
    for (long c = lo; c <= hi; ++c) {
      inside(k, c, center, budget, slack);
      c_[k] = c;
      if (k == 0) {
        if (points_.size() >= max_points_)
          fail(ErrorCode::kResource, "shell exceeds the cap of " + std::to_string(max_points_) + " points");
        points_.push_back(c_);
      } else {
        descend(k - 1, slack);
      }
    }
    c_[k] = 0;
  }

  const RatMatrix& u_;
  const std::vector<Rational>& d_;
  std::size_t r_;
  std::size_t max_points_;
  std::vector<std::int64_t> c_;
  std::vector<std::vector<std::int64_t>> points_;
};

}  // namespace

PointShell enumerate_shell(const LatticeModel& m, const RatMatrix& q, const Rational& dilation,
                           std::size_t max_points) {
  if (dilation <= 0) fail(ErrorCode::kDomain, "dilation must be positive");
  if (q.rows() != m.rank() || !q.square()) fail(ErrorCode::kDomain, "form dimension does not match the lattice");
  const auto f = ldlt(q);
  if (!f || std::any_of(f->diagonal.begin(), f->diagonal.end(), [](const Rational& d) { return d <= 0; }))
    fail(ErrorCode::kDomain, "shell form is not positive definite");

  ShellEnumerator en(*f, max_points);
  auto points = en.run(dilation * dilation);
  std::sort(points.begin(), points.end());

  PointShell shell(dilation, m.rank(), m.arity());
  std::vector<std::int64_t> vals(m.arity());
  for (const auto& c : points) {
    m.values(c, vals);
    shell.push(c, vals);
  }
  if (!validate_shell(m, shell)) fail(ErrorCode::kInternal, "shell invariants violated");
  return shell;
}

PointShell enumerate_shell(const LatticeModel& m, const EllipsoidForm& e, const Rational& dilation,
                           std::size_t max_points) {
  return enumerate_shell(m, e.q, dilation, max_points);
}

bool validate_shell(const LatticeModel& m, const PointShell& shell) {
  const std::size_t n = m.arity();
  std::vector<std::int64_t> a;
  for (const auto& x : m.coeffs.a()) a.push_back(to_int64(x));
  std::vector<std::vector<std::int64_t>> coords, vals;
  std::vector<std::int64_t> expect(n);
  for (std::size_t k = 0; k < shell.size(); ++k) {
    const auto c = shell.point(k);
    const auto v = shell.values(k);
    m.values(c, expect);
    __int128 rel = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] != expect[i]) return false;
      rel += static_cast<__int128>(a[i]) * v[i];
    }
    if (rel != 0) return false;
    coords.emplace_back(c.begin(), c.end());
    vals.emplace_back(v.begin(), v.end());
  }
  if (!std::is_sorted(coords.begin(), coords.end())) return false;
  for (const auto& c : coords) {
    std::vector<std::int64_t> neg(c.size());
    std::transform(c.begin(), c.end(), neg.begin(), [](auto x) { return -x; });
    if (!std::binary_search(coords.begin(), coords.end(), neg)) return false;
  }
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

DilationResult equal_image_dilation(const LatticeModel& m, const EllipsoidForm& e, const Rational& d0,
                                    const Rational& max_dilation, std::size_t max_points) {
  if (d0 <= 0) fail(ErrorCode::kDomain, "initial dilation must be positive");
  std::vector<Rational> attempted;
  for (Rational d = d0; d <= max_dilation; d *= 2) {
    PointShell shell = enumerate_shell(m, e, d, max_points);
    attempted.push_back(d);
    const auto first = shell.image(0);
    bool same = true;
    for (std::size_t i = 1; i < m.arity() && same; ++i) same = shell.image(i) == first;
    if (same) return DilationResult{d, std::move(shell), std::move(attempted)};
  }
  fail(ErrorCode::kResource, "images never coincided up to D = " + to_string(max_dilation));
}

std::uint64_t vertex_count_discrepancy(const PointShell& shell) {
  const std::size_t n = shell.arity();
  std::map<std::int64_t, std::vector<std::uint64_t>> counts;
  for (std::size_t k = 0; k < shell.size(); ++k) {
    const auto v = shell.values(k);
    for (std::size_t i = 0; i < n; ++i) {
      auto& row = counts[v[i]];
      if (row.empty()) row.assign(n, 0);
      ++row[i];
    }
  }
  std::uint64_t worst = 0;
  for (const auto& [y, row] : counts) {
    const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    worst = std::max(worst, *hi - *lo);
  }
  return worst;
}

std::string shell_csv(const PointShell& shell) {
  std::ostringstream out;
  for (std::size_t k = 0; k < shell.rank(); ++k) out << (k ? "," : "") << 'c' << (k + 1);
  for (std::size_t i = 0; i < shell.arity(); ++i) out << ",L" << (i + 1);
  out << '\n';
  for (std::size_t k = 0; k < shell.size(); ++k) {
    const auto c = shell.point(k);
    const auto v = shell.values(k);
    for (std::size_t j = 0; j < c.size(); ++j) out << (j ? "," : "") << c[j];
    for (auto x : v) out << ',' << x;
    out << '\n';
  }
  return out.str();
}

}  // namespace smyth

#include "smyth/local_witness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "smyth/error.hpp"
#include "smyth/lattice.hpp"
#include "smyth/number_theory.hpp"

namespace smyth {

namespace {

using Vec2 = std::array<double, 2>;

class PlanarBuilder {
 public:
  explicit PlanarBuilder(std::uint64_t mask) : mask_(mask) {}

  std::vector<Vec2> build(const std::vector<double>& len) {
    const std::size_t m = len.size();
    std::vector<Vec2> out(m, Vec2{0.0, 0.0});
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < m; ++i)
      if (len[i] > 0.0) live.push_back(i);
    if (live.size() < m) {
      std::vector<double> sub;
      for (auto i : live) sub.push_back(len[i]);
      const auto part = build(sub);
      for (std::size_t k = 0; k < live.size(); ++k) out[live[k]] = part[k];
      return out;
    }
    switch (m) {
      case 0:
        return out;
      case 1:
        fail(ErrorCode::kInternal, "single nonzero length in converse triangle recursion");
      case 2:
        out[0] = {len[0], 0.0};
        out[1] = {-len[1], 0.0};
        return out;
      case 3: {
        const double c = std::clamp((len[2] * len[2] - len[0] * len[0] - len[1] * len[1]) / (2.0 * len[0] * len[1]),
                                    -1.0, 1.0);
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        out[0] = {len[0], 0.0};
        out[1] = {len[1] * c, len[1] * s};
        out[2] = {-(out[0][0] + out[1][0]), -(out[0][1] + out[1][1])};
        return out;
      }
      default:
        return glue(len);
    }
  }

 private:
  std::vector<Vec2> glue(const std::vector<double>& len) {
    const std::size_t m = len.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return len[x] > len[y]; });
    std::vector<std::size_t> s_idx, t_idx;
    for (std::size_t k = 0; k < m; ++k) (k % 2 == 0 ? s_idx : t_idx).push_back(order[k]);

    auto interval = [&](const std::vector<std::size_t>& idx) {
      double sum = 0.0, mx = 0.0;
      for (auto i : idx) {
        sum += len[i];
        mx = std::max(mx, len[i]);
      }
      return std::array<double, 2>{2.0 * mx - sum, sum};
    };
    const auto is = interval(s_idx), it = interval(t_idx);
    const double lo = std::max({is[0], it[0], 0.0});
    const double hi = std::min(is[1], it[1]);
    const double aux = lo <= hi ? 0.5 * (lo + hi) : hi;

    std::vector<double> s_len, t_len;
    for (auto i : s_idx) s_len.push_back(len[i]);
    for (auto i : t_idx) t_len.push_back(len[i]);
    s_len.push_back(aux);
    t_len.push_back(aux);
    const bool reflect = (mask_ >> bit_++) & 1U;
    auto s_vec = build(s_len);
    auto t_vec = build(t_len);

    // sum(S) = -u and sum(T) = -u'; rotate T so that u' = -u.
    const Vec2 u = s_vec.back(), up = t_vec.back();
    if (reflect) {
      // Mirror T across the line spanned by u'.
      const double nu = std::hypot(up[0], up[1]);
      if (nu > 0.0) {
        const double ex = up[0] / nu, ey = up[1] / nu;
        for (auto& v : t_vec) {
          const double dot = v[0] * ex + v[1] * ey;
          v = {2.0 * dot * ex - v[0], 2.0 * dot * ey - v[1]};
        }
      }
    }
    double c = 1.0, s = 0.0;
    const double nu = std::hypot(u[0], u[1]), nup = std::hypot(up[0], up[1]);
    if (nu > 0.0 && nup > 0.0) {
      const Vec2 target{-u[0], -u[1]};
      c = (up[0] * target[0] + up[1] * target[1]) / (nu * nup);
      s = (up[0] * target[1] - up[1] * target[0]) / (nu * nup);
      const double scale = 0.5 * (3.0 - (c * c + s * s));  // Newton step toward c^2 + s^2 = 1
      c *= scale;
      s *= scale;
    }
    std::vector<Vec2> out(m);
    for (std::size_t k = 0; k < s_idx.size(); ++k) out[s_idx[k]] = s_vec[k];
    for (std::size_t k = 0; k < t_idx.size(); ++k) {
      const Vec2 v = t_vec[k];
      out[t_idx[k]] = {c * v[0] - s * v[1], s * v[0] + c * v[1]};
    }
    return out;
  }

  std::uint64_t mask_;
  unsigned bit_ = 0;
};

RealConfiguration finish(const std::vector<Vec2>& planar, std::size_t dim) {
  RealConfiguration cfg;
  double sx = 0.0, sy = 0.0;
  for (const auto& v : planar) {
    std::vector<double> full(dim, 0.0);
    full[0] = v[0];
    full[1] = v[1];
    cfg.vectors.push_back(std::move(full));
    sx += v[0];
    sy += v[1];
  }
  cfg.residual = std::hypot(sx, sy);
  return cfg;
}

}  // namespace

RealConfiguration converse_triangle_real(std::span<const double> lengths, std::size_t dim, std::uint64_t reflect_mask) {
  if (lengths.empty()) fail(ErrorCode::kDomain, "empty length list");
  if (dim < 2) fail(ErrorCode::kDomain, "dimension must be at least 2");
  double sum = 0.0, mx = 0.0;
  for (double l : lengths) {
    if (!(l >= 0.0)) fail(ErrorCode::kDomain, "lengths must be nonnegative");
    sum += l;
    mx = std::max(mx, l);
  }
  if (2.0 * mx > sum * (1.0 + 1e-12)) fail(ErrorCode::kFeasibility, "lengths violate 2 max <= sum");
  PlanarBuilder builder(reflect_mask);
  return finish(builder.build({lengths.begin(), lengths.end()}), dim);
}

RealConfiguration converse_triangle_real(std::span<const Rational> lengths, std::size_t dim) {
  if (lengths.empty()) fail(ErrorCode::kDomain, "empty length list");
  Rational sum = 0, mx = 0;
  for (const auto& l : lengths) {
    if (l < 0) fail(ErrorCode::kDomain, "lengths must be nonnegative");
    sum += l;
    if (l > mx) mx = l;
  }
  if (2 * mx > sum) fail(ErrorCode::kFeasibility, "lengths violate 2 max <= sum");
  std::vector<double> d;
  for (const auto& l : lengths) d.push_back(to_double(l));
  return converse_triangle_real(d, dim, 0);
}

std::optional<long> padic_vector_valuation(std::span<const Rational> x, const BigInt& p) {
  std::optional<long> best;
  for (const auto& xi : x) {
    const auto v = padic_valuation(xi, p);
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

std::vector<std::vector<Rational>> converse_triangle_nonarch(std::span<const std::optional<long>> valuations,
                                                             const BigInt& p, std::size_t dim) {
  if (valuations.empty()) fail(ErrorCode::kDomain, "empty valuation list");
  if (dim < 2) fail(ErrorCode::kDomain, "dimension must be at least 2");
  if (!is_prime(p)) fail(ErrorCode::kDomain, to_string(p) + " is not prime");
  auto power = [&](long v) {
    BigInt q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
    return v < 0 ? make_rational(BigInt(1), q) : Rational(q);
  };

  std::vector<std::vector<Rational>> out(valuations.size(), std::vector<Rational>(dim));
  std::optional<long> lowest;
  for (const auto& v : valuations)
    if (v && (!lowest || *v < *lowest)) lowest = v;
  if (!lowest) return out;  // all vectors zero

  std::vector<std::size_t> at_min;
  for (std::size_t i = 0; i < valuations.size(); ++i)
    if (valuations[i] == lowest) at_min.push_back(i);
  if (at_min.size() < 2) fail(ErrorCode::kFeasibility, "minimum valuation must occur at least twice");

  // b_i = (p^v_i, 0) for the rest, b_{i1} = (p^M, p^M), and b_{i0} absorbs the sum:
  // its second coordinate -p^M pins the norm at p^{-M}, the first has valuation >= M.
  const std::size_t i0 = at_min[0], i1 = at_min[1];
  const Rational pm = power(*lowest);
  Rational first = 0;
  for (std::size_t i = 0; i < valuations.size(); ++i) {
    if (i == i0 || !valuations[i]) continue;
    if (i == i1) {
      out[i][0] = pm;
      out[i][1] = pm;
    } else {
      out[i][0] = power(*valuations[i]);
    }
    first += out[i][0];
  }
  out[i0][0] = -first;
  out[i0][1] = -pm;
  return out;
}

LocalUniformResult local_uniform_check(const Coefficients& c, const BigInt& p, unsigned k) {
  if (k == 0) fail(ErrorCode::kDomain, "precision k must be at least 1");
  if (!check_place(c, Place{p}).holds)
    fail(ErrorCode::kDomain, "local condition fails at p = " + to_string(p) + "; uniformity check refused");
  const LatticeModel lattice = hyperplane_lattice(c);
  const std::size_t n = lattice.arity(), r = lattice.rank();

  BigInt modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), k);
  BigInt total = 1;
  for (std::size_t j = 0; j < r; ++j) total *= modulus;
  if (total > BigInt(100000000)) fail(ErrorCode::kResource, "p^(k(n-1)) exceeds the enumeration cap of 10^8");
  const auto mod = static_cast<std::uint64_t>(modulus.get_ui());

  // Unit-normalize each form by its p-adic content, then reduce mod p^k.
  std::vector<std::vector<std::uint64_t>> reduced(n, std::vector<std::uint64_t>(r, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigInt> coeffs;
    for (auto x : lattice.forms[i]) coeffs.emplace_back(static_cast<long>(x));
    std::optional<long> vmin;
    for (const auto& x : coeffs) {
      const auto v = padic_valuation(x, p);
      if (v && (!vmin || *v < *vmin)) vmin = v;
    }
    BigInt scale = 1;
    if (vmin) mpz_pow_ui(scale.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(*vmin));
    for (std::size_t j = 0; j < r; ++j) {
      BigInt v = coeffs[j] / scale;
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
      reduced[i][j] = v.get_ui();
    }
  }

  LocalUniformResult res;
  res.modulus = modulus;
  res.counts.assign(n, std::vector<std::uint64_t>(mod, 0));
  std::vector<std::uint64_t> point(r, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < r; ++j) s = (s + reduced[i][j] * point[j]) % mod;
      ++res.counts[i][s];
    }
    std::size_t j = 0;
    while (j < r && ++point[j] == mod) point[j++] = 0;
    if (j == r) break;
  }
  res.identical = std::all_of(res.counts.begin(), res.counts.end(),
                              [&](const auto& h) { return h == res.counts.front(); });
  return res;
}

}  // namespace smyth

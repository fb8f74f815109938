#include "smyth/balance_lp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "smyth/error.hpp"
#include "smyth/lattice.hpp"
#include "smyth/lattice_reduction.hpp"

namespace smyth {

Hypergraph::Hypergraph(std::size_t arity, std::vector<std::int64_t> vertices, std::vector<std::uint32_t> edge_data)
    : arity_(arity), vertices_(std::move(vertices)), edges_(std::move(edge_data)) {
  if (arity_ == 0) fail(ErrorCode::kDomain, "hypergraph arity must be positive");
  if (edges_.size() % arity_ != 0) fail(ErrorCode::kDomain, "edge data is not a whole number of tuples");
  if (!std::is_sorted(vertices_.begin(), vertices_.end()) ||
      std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    fail(ErrorCode::kDomain, "vertices must be sorted and distinct");
  for (auto v : edges_)
    if (v >= vertices_.size()) fail(ErrorCode::kDomain, "edge references a missing vertex");
  std::set<std::vector<std::uint32_t>> seen;
  for (std::size_t e = 0; e < edge_count(); ++e) {
    auto t = edge(e);
    if (!seen.emplace(t.begin(), t.end()).second) fail(ErrorCode::kDomain, "repeated edge");
  }
}

Hypergraph Hypergraph::from_tuples(std::size_t arity, const std::vector<std::vector<std::int64_t>>& tuples) {
  std::vector<std::int64_t> verts;
  for (const auto& t : tuples) {
    if (t.size() != arity) fail(ErrorCode::kDomain, "tuple length differs from arity");
    verts.insert(verts.end(), t.begin(), t.end());
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<std::uint32_t> data;
  data.reserve(tuples.size() * arity);
  for (const auto& t : tuples)
    for (auto x : t)
      data.push_back(static_cast<std::uint32_t>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin()));
  return Hypergraph(arity, std::move(verts), std::move(data));
}

std::vector<std::int64_t> Hypergraph::edge_values(std::size_t e) const {
  std::vector<std::int64_t> out;
  for (auto v : edge(e)) out.push_back(vertices_[v]);
  return out;
}

Hypergraph build_hypergraph(const PointShell& shell) {
  if (shell.size() == 0) fail(ErrorCode::kDomain, "empty shell");
  std::vector<std::vector<std::int64_t>> tuples;
  tuples.reserve(shell.size());
  for (std::size_t k = 0; k < shell.size(); ++k) {
    auto v = shell.values(k);
    tuples.emplace_back(v.begin(), v.end());
  }
  return Hypergraph::from_tuples(shell.arity(), tuples);
}

Hypergraph without_origin(const Hypergraph& g) {
  std::vector<std::vector<std::int64_t>> tuples;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto v = g.edge_values(e);
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) continue;
    tuples.push_back(std::move(v));
  }
  if (tuples.empty()) fail(ErrorCode::kDomain, "hypergraph has no edge besides the origin");
  return Hypergraph::from_tuples(g.arity(), tuples);
}

Imbalance apply_balance_operator(const Hypergraph& g, std::span<const Rational> weights) {
  if (weights.size() != g.edge_count()) fail(ErrorCode::kDomain, "one weight per edge required");
  Imbalance out;
  out.degree.assign(g.arity(), std::vector<Rational>(g.vertex_count()));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (weights[e] == 0) continue;
    const auto t = g.edge(e);
    for (std::size_t i = 0; i < g.arity(); ++i) out.degree[i][t[i]] += weights[e];
  }
  out.per_vertex.resize(g.vertex_count());
  out.max = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Rational lo = out.degree[0][v], hi = lo;
    for (std::size_t i = 1; i < g.arity(); ++i) {
      if (out.degree[i][v] < lo) lo = out.degree[i][v];
      if (out.degree[i][v] > hi) hi = out.degree[i][v];
    }
    out.per_vertex[v] = hi - lo;
    if (out.per_vertex[v] > out.max) out.max = out.per_vertex[v];
  }
  return out;
}

std::vector<std::size_t> BalancedWeighting::support() const {
  std::vector<std::size_t> s;
  for (std::size_t e = 0; e < weights.size(); ++e)
    if (weights[e] != 0) s.push_back(e);
  return s;
}

namespace {

struct Entry {
  std::uint32_t row;
  int coef;
};

// Revised simplex with an explicit dense basis inverse. Columns 0..E-1 are
// edges, E..E+m-1 artificials; artificials never re-enter once they leave.
class PhaseOneSimplex {
 public:
  PhaseOneSimplex(const Hypergraph& g, const LpOptions& options) : g_(g), options_(options) {
    const std::size_t n = g.arity(), nv = g.vertex_count();
    rows_ = (n - 1) * nv + 1;
    edges_ = g.edge_count();
    columns_.resize(edges_);
    for (std::size_t e = 0; e < edges_; ++e) {
      std::map<std::uint32_t, int> acc;
      const auto t = g.edge(e);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        acc[static_cast<std::uint32_t>(i * nv + t[i])] += 1;
        acc[static_cast<std::uint32_t>(i * nv + t[i + 1])] -= 1;
      }
      acc[static_cast<std::uint32_t>(rows_ - 1)] += 1;
      for (const auto& [row, coef] : acc)
        if (coef != 0) columns_[e].push_back({row, coef});
    }
    binv_.assign(rows_ * rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) binv_[i * rows_ + i] = 1;
    x_.assign(rows_, Rational(0));
    x_[rows_ - 1] = 1;
    y_.assign(rows_, Rational(1));
    basic_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) basic_[i] = edges_ + i;
  }

  // Exact basis change to the given edge columns, ignoring the ratio test,
  // then x and y from scratch. Returns false (and restores the artificial
  // basis) if the result is not primal feasible.
  bool warm_start(const std::vector<std::size_t>& row_basis) {
    // Only artificials absent from the target basis may be displaced.
    std::vector<char> keep(rows_, 0);
    for (std::size_t q : row_basis)
      if (q >= edges_) keep[q - edges_] = 1;
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::size_t q = row_basis[r];
      if (q >= edges_) continue;
      std::vector<Rational> u = column_image(q);
      std::size_t target = rows_;
      for (std::size_t i = 0; target == rows_ && i < rows_; ++i)
        if (basic_[i] >= edges_ && !keep[basic_[i] - edges_] && u[i] != 0) target = i;
      if (target == rows_) return reset();
      eliminate(target, u);
      basic_[target] = q;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      x_[i] = binv_[i * rows_ + rows_ - 1];
      if (x_[i] < 0) return reset();
    }
    for (std::size_t j = 0; j < rows_; ++j) {
      y_[j] = 0;
      for (std::size_t i = 0; i < rows_; ++i)
        if (basic_[i] >= edges_) y_[j] += binv_[i * rows_ + j];
    }
    return true;
  }

  void run() {
    bool bland = options_.rule == PivotRule::kBland;
    std::size_t degenerate_run = 0;
    const std::size_t degenerate_limit = 50 + 4 * rows_;
    Rational dq, best;
    while (true) {
      std::size_t q = edges_;
      for (std::size_t j = 0; j < edges_; ++j) {
        reduced_cost(j, dq);
        if (dq >= 0) continue;
        if (bland) {
          q = j;
          best = dq;
          break;
        }
        if (q == edges_ || dq < best) {
          q = j;
          best = dq;
        }
      }
      if (q == edges_) return;
      const bool degenerate = pivot(q, best);
      ++pivots_;
      degenerate_run = degenerate ? degenerate_run + 1 : 0;
      if (!bland && degenerate_run > degenerate_limit) bland = true;
    }
  }

  Rational objective() const {
    Rational s = 0;
    for (std::size_t i = 0; i < rows_; ++i)
      if (basic_[i] >= edges_) s += x_[i];
    return s;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> w(edges_);
    for (std::size_t i = 0; i < rows_; ++i)
      if (basic_[i] < edges_) w[basic_[i]] = x_[i];
    return w;
  }

  const std::vector<Rational>& dual() const { return y_; }
  std::size_t rows() const { return rows_; }
  std::size_t pivots() const { return pivots_; }

 private:
  void reduced_cost(std::size_t j, Rational& out) const {
    out = 0;
    for (const auto& en : columns_[j]) {
      if (en.coef == 1)
        out -= y_[en.row];
      else if (en.coef == -1)
        out += y_[en.row];
      else
        out -= en.coef * y_[en.row];
    }
  }

  std::vector<Rational> column_image(std::size_t q) const {
    std::vector<Rational> u(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational* row = &binv_[i * rows_];
      for (const auto& en : columns_[q]) {
        if (row[en.row] == 0) continue;
        u[i] += en.coef * row[en.row];
      }
    }
    return u;
  }

  // Row operations on B^-1 making u the r-th unit vector.
  void eliminate(std::size_t r, const std::vector<Rational>& u) {
    Rational* prow = &binv_[r * rows_];
    std::vector<std::uint32_t> nz;
    for (std::size_t j = 0; j < rows_; ++j)
      if (prow[j] != 0) nz.push_back(static_cast<std::uint32_t>(j));
    for (auto j : nz) prow[j] /= u[r];
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || u[i] == 0) continue;
      Rational* row = &binv_[i * rows_];
      for (auto j : nz) row[j] -= u[i] * prow[j];
    }
  }

  bool reset() {
    std::fill(binv_.begin(), binv_.end(), Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      binv_[i * rows_ + i] = 1;
      basic_[i] = edges_ + i;
      x_[i] = 0;
      y_[i] = 1;
    }
    x_[rows_ - 1] = 1;
    return false;
  }

  // Returns true when the step length was zero.
  bool pivot(std::size_t q, const Rational& dq) {
    const std::vector<Rational> u = column_image(q);
    // Ratio test; ties go to the smallest basic variable index (Bland).
    std::size_t r = rows_;
    Rational best, ratio;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (u[i] <= 0) continue;
      ratio = x_[i] / u[i];
      if (r == rows_ || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r == rows_) fail(ErrorCode::kInternal, "phase-one objective unbounded");

    const Rational step = dq / u[r];
    const Rational* prow = &binv_[r * rows_];
    for (std::size_t j = 0; j < rows_; ++j)
      if (prow[j] != 0) y_[j] += step * prow[j];

    const Rational theta = best;
    if (theta != 0)
      for (std::size_t i = 0; i < rows_; ++i)
        if (i != r && u[i] != 0) x_[i] -= theta * u[i];
    eliminate(r, u);
    x_[r] = theta;
    basic_[r] = q;
    return theta == 0;
  }

  const Hypergraph& g_;
  LpOptions options_;
  std::size_t rows_ = 0, edges_ = 0, pivots_ = 0;
  std::vector<std::vector<Entry>> columns_;
  std::vector<Rational> binv_, x_, y_;
  std::vector<std::size_t> basic_;
};

// Dense double tableau for the same phase-1 problem. Only the final basis is
// used; the exact simplex takes over from there.
std::vector<std::size_t> float_phase_one(const Hypergraph& g, std::size_t& pivots) {
  const std::size_t n = g.arity(), nv = g.vertex_count(), m = (n - 1) * nv + 1, E = g.edge_count();
  constexpr double kTol = 1e-9;
  std::vector<double> t(m * E, 0.0), rhs(m, 0.0), d(E, 0.0);
  for (std::size_t e = 0; e < E; ++e) {
    const auto tu = g.edge(e);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      t[(i * nv + tu[i]) * E + e] += 1;
      t[(i * nv + tu[i + 1]) * E + e] -= 1;
    }
    t[(m - 1) * E + e] = 1;
  }
  // Fixed positive perturbation against degeneracy.
  for (std::size_t i = 0; i + 1 < m; ++i) rhs[i] = 1e-7 * (1.0 + std::fmod(0.6180339887 * static_cast<double>(i + 1), 1.0));
  rhs[m - 1] = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t e = 0; e < E; ++e) d[e] -= t[i * E + e];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = E + i;

  const std::size_t limit = 50 * (m + E);
  std::size_t stall = 0;
  pivots = 0;
  while (pivots < limit) {
    std::size_t q = E;
    if (stall > m) {
      for (std::size_t e = 0; e < E && q == E; ++e)
        if (d[e] < -kTol) q = e;
    } else {
      double best = -kTol;
      for (std::size_t e = 0; e < E; ++e)
        if (d[e] < best) {
          best = d[e];
          q = e;
        }
    }
    if (q == E) return basis;
    std::size_t r = m;
    double ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double u = t[i * E + q];
      if (u <= kTol) continue;
      const double rt = std::max(rhs[i], 0.0) / u;
      if (r == m || rt < ratio - kTol ||
          (rt <= ratio + kTol && (basis[i] >= E) > (basis[r] >= E)) ||
          (rt <= ratio + kTol && (basis[i] >= E) == (basis[r] >= E) && basis[i] < basis[r])) {
        r = i;
        ratio = rt;
      }
    }
    if (r == m) break;
    stall = ratio <= kTol ? stall + 1 : 0;
    double* pr = &t[r * E];
    const double pv = pr[q];
    for (std::size_t e = 0; e < E; ++e) pr[e] /= pv;
    rhs[r] /= pv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      double* row = &t[i * E];
      const double f = row[q];
      if (f == 0) continue;
      for (std::size_t e = 0; e < E; ++e) row[e] -= f * pr[e];
      row[q] = 0;
      rhs[i] -= f * rhs[r];
    }
    const double f = d[q];
    for (std::size_t e = 0; e < E; ++e) d[e] -= f * pr[e];
    d[q] = 0;
    basis[r] = q;
    ++pivots;
  }
  return {};
}

BigInt content_scale(std::vector<Rational>& xs) {
  BigInt l = lcm_of_denominators(xs);
  std::vector<BigInt> nums;
  for (const auto& x : xs) nums.push_back(x.get_num() * (l / x.get_den()));
  const BigInt g = gcd_of(nums);
  return g == 0 ? BigInt(1) : g;
}

}  // namespace

BalanceOutcome find_balanced(const Hypergraph& g, const LpOptions& options, LpStats* stats) {
  if (g.edge_count() == 0) fail(ErrorCode::kDomain, "hypergraph has no edges");
  if (g.arity() < 2) fail(ErrorCode::kDomain, "arity must be at least 2");
  PhaseOneSimplex lp(g, options);
  std::size_t float_pivots = 0;
  bool warm = false;
  if (options.float_warm_start) {
    const auto basis = float_phase_one(g, float_pivots);
    if (!basis.empty()) warm = lp.warm_start(basis);
  }
  lp.run();
  if (stats) *stats = LpStats{lp.rows(), g.edge_count(), lp.pivots(), float_pivots, warm};

  if (lp.objective() == 0) {
    BalancedWeighting w;
    w.weights = lp.primal();
    const BigInt l = lcm_of_denominators(w.weights);
    for (const auto& x : w.weights) w.integer_form.push_back(x.get_num() * (l / x.get_den()));
    const BigInt c = gcd_of(w.integer_form);
    for (auto& x : w.integer_form) x /= c;
    if (!validate_weighting(g, w)) fail(ErrorCode::kInternal, "simplex weighting failed validation");
    return w;
  }

  // Farkas vector z = -y: z^T A_e >= 0 on every edge and z_norm < 0.
  const std::size_t n = g.arity(), nv = g.vertex_count();
  const auto& y = lp.dual();
  GordanCertificate cert;
  cert.vertices = g.vertices();
  cert.f.assign(n, std::vector<Rational>(nv));
  for (std::size_t v = 0; v < nv; ++v) {
    Rational prev = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational gi = i + 1 < n ? Rational(-y[i * nv + v]) : Rational(0);
      cert.f[i][v] = gi - prev;
      prev = gi;
    }
  }
  std::vector<Rational> flat;
  for (const auto& fi : cert.f) flat.insert(flat.end(), fi.begin(), fi.end());
  const BigInt l = lcm_of_denominators(flat);
  const BigInt c = content_scale(flat);
  const Rational scale = make_rational(l, c);
  for (auto& fi : cert.f)
    for (auto& x : fi) x *= scale;
  bool first = true;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    Rational s = 0;
    const auto t = g.edge(e);
    for (std::size_t i = 0; i < n; ++i) s += cert.f[i][t[i]];
    if (first || s < cert.margin) cert.margin = s;
    first = false;
  }
  if (!validate_certificate(g, cert)) fail(ErrorCode::kInternal, "simplex certificate failed validation");
  return cert;
}

bool validate_weighting(const Hypergraph& g, const BalancedWeighting& w) {
  if (w.weights.size() != g.edge_count()) return false;
  Rational total = 0;
  for (const auto& x : w.weights) {
    if (x < 0) return false;
    total += x;
  }
  if (total != 1) return false;
  if (apply_balance_operator(g, w.weights).max != 0) return false;
  if (w.integer_form.size() != w.weights.size()) return false;
  // integer_form must be the primitive positive multiple of weights.
  const BigInt c = gcd_of(w.integer_form);
  if (c != 1) return false;
  std::size_t ref = w.weights.size();
  for (std::size_t e = 0; e < w.weights.size(); ++e)
    if (w.weights[e] != 0) {
      ref = e;
      break;
    }
  if (ref == w.weights.size()) return false;
  const Rational ratio = Rational(w.integer_form[ref]) / w.weights[ref];
  for (std::size_t e = 0; e < w.weights.size(); ++e)
    if (Rational(w.integer_form[e]) != ratio * w.weights[e]) return false;
  return true;
}

bool validate_certificate(const Hypergraph& g, const GordanCertificate& cert) {
  const std::size_t n = g.arity(), nv = g.vertex_count();
  if (cert.vertices != g.vertices() || cert.f.size() != n) return false;
  for (const auto& fi : cert.f)
    if (fi.size() != nv) return false;
  for (std::size_t v = 0; v < nv; ++v) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += cert.f[i][v];
    if (s != 0) return false;
  }
  if (cert.margin <= 0) return false;
  bool attained = false;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    Rational s = 0;
    const auto t = g.edge(e);
    for (std::size_t i = 0; i < n; ++i) s += cert.f[i][t[i]];
    if (s < cert.margin) return false;
    if (s == cert.margin) attained = true;
  }
  return attained;
}

Rational certificate_pairing(const Hypergraph& g, const GordanCertificate& cert, std::span<const Rational> weights) {
  if (weights.size() != g.edge_count()) fail(ErrorCode::kDomain, "one weight per edge required");
  Rational total = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (weights[e] == 0) continue;
    Rational s = 0;
    const auto t = g.edge(e);
    for (std::size_t i = 0; i < g.arity(); ++i) s += cert.f[i][t[i]];
    total += weights[e] * s;
  }
  return total;
}

BigInt integer_size(const BalancedWeighting& w) {
  BigInt s = 0;
  for (const auto& x : w.integer_form) s += x;
  return s;
}

namespace {

// Least-sum nonnegative nonzero lattice point in ker A, over all edges of g.
std::optional<IntVec> short_balanced(const Hypergraph& g) {
  const std::size_t n = g.arity(), nv = g.vertex_count(), edges = g.edge_count();
  std::vector<SparseRow> rows((n - 1) * nv);
  for (std::size_t e = 0; e < edges; ++e) {
    const auto t = g.edge(e);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      rows[i * nv + t[i]].emplace_back(static_cast<std::uint32_t>(e), 1);
      rows[i * nv + t[i + 1]].emplace_back(static_cast<std::uint32_t>(e), -1);
    }
  }
  auto kernel = integer_kernel(rows, edges);
  if (!kernel || kernel->empty()) return std::nullopt;
  lll_reduce(*kernel);

  std::optional<IntVec> best;
  std::int64_t best_sum = 0;
  auto offer = [&](const IntVec& w) {
    std::int64_t s = 0;
    for (auto x : w)
      if (x < 0 || __builtin_add_overflow(s, x, &s)) return;
    if (s > 0 && (!best || s < best_sum)) {
      best = w;
      best_sum = s;
    }
  };
  for (const auto& v : *kernel) {
    offer(v);
    IntVec neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](std::int64_t x) { return -x; });
    offer(neg);
  }
  for (double t = 1; t <= 64; t *= 2) {
    const std::vector<double> target(edges, t);
    if (auto w = nearest_plane(*kernel, target)) offer(*w);
  }
  return best;
}

}  // namespace

std::optional<BalancedWeighting> compact_weighting(const Hypergraph& g, std::size_t max_edges) {
  const std::size_t total = g.edge_count();
  std::vector<std::pair<std::int64_t, std::size_t>> by_norm;
  for (std::size_t e = 0; e < total; ++e) {
    std::int64_t s = 0;
    for (auto v : g.edge_values(e)) s += v * v;
    by_norm.emplace_back(s, e);
  }
  std::sort(by_norm.begin(), by_norm.end());

  std::vector<std::size_t> sizes;
  for (std::size_t k = 32; k < total && k <= max_edges; k *= 2) sizes.push_back(k);
  if (total <= max_edges) sizes.push_back(total);

  for (const std::size_t k : sizes) {
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < k; ++j) chosen.push_back(by_norm[j].second);
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::vector<std::int64_t>> tuples;
    for (auto e : chosen) tuples.push_back(g.edge_values(e));
    const Hypergraph sub = Hypergraph::from_tuples(g.arity(), tuples);
    // Smallest points first, like a finer dilation schedule.
    if (k < total && std::holds_alternative<GordanCertificate>(find_balanced(sub))) continue;
    const auto w = short_balanced(sub);
    if (!w) continue;

    std::vector<BigInt> ints(total);
    for (std::size_t j = 0; j < chosen.size(); ++j) ints[chosen[j]] = static_cast<long>((*w)[j]);
    const BigInt c = gcd_of(ints);
    BigInt sum = 0;
    for (auto& x : ints) {
      x /= c;
      sum += x;
    }
    BalancedWeighting out;
    for (const auto& x : ints) out.weights.push_back(make_rational(x, sum));
    out.integer_form = std::move(ints);
    if (!validate_weighting(g, out)) fail(ErrorCode::kInternal, "compacted weighting failed validation");
    return out;
  }
  return std::nullopt;
}

BoxOracleResult box_oracle(const Coefficients& c, long bound, std::size_t max_points) {
  if (bound < 1) fail(ErrorCode::kDomain, "box bound must be positive");
  const LatticeModel m = hyperplane_lattice(c);
  const std::size_t r = m.rank();
  BigInt total = 1;
  for (std::size_t j = 0; j < r; ++j) total *= 2 * bound + 1;
  if (total > BigInt(static_cast<unsigned long>(max_points)))
    fail(ErrorCode::kResource, "box exceeds the point cap");
  std::vector<std::vector<std::int64_t>> tuples;
  std::vector<std::int64_t> point(r, -bound);
  while (true) {
    auto v = m.values(point);
    if (std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; })) tuples.push_back(std::move(v));
    std::size_t j = 0;
    while (j < r && ++point[j] > bound) point[j++] = -bound;
    if (j == r) break;
  }
  BoxOracleResult res{Hypergraph::from_tuples(m.arity(), tuples), std::nullopt};
  auto outcome = find_balanced(res.graph);
  if (auto* w = std::get_if<BalancedWeighting>(&outcome)) res.weighting = std::move(*w);
  return res;
}

}  // namespace smyth

#include "smyth/witness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "smyth/error.hpp"
#include "smyth/linear_algebra.hpp"

namespace smyth {

namespace {

bool all_zero(std::span<const Rational> x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; });
}

template <typename T>
bool on_relation(const Coefficients& c, std::span<const T> row) {
  T s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * row[i];
  return s == 0;
}

int sign_of(const BigInt& x) { return sgn(x); }

}  // namespace

Distribution assemble_distribution(const Hypergraph& g, const BalancedWeighting& w) {
  if (!validate_weighting(g, w)) fail(ErrorCode::kDomain, "weighting does not balance the hypergraph");
  Distribution d;
  Rational kept = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (w.weights[e] == 0) continue;
    std::vector<Rational> x;
    for (auto v : g.edge_values(e)) x.emplace_back(v);
    if (all_zero(x)) continue;
    d.support.push_back(std::move(x));
    d.probabilities.push_back(w.weights[e]);
    kept += w.weights[e];
  }
  if (d.support.empty()) {
    d.support.push_back(std::vector<Rational>(g.arity()));
    d.probabilities.push_back(Rational(1));
    d.trivial = true;
    return d;
  }
  for (auto& p : d.probabilities) p /= kept;
  // Removing a balanced atom keeps the marginals equal.
  for (std::size_t i = 1; i < g.arity(); ++i)
    if (marginal(d, i) != marginal(d, 0)) fail(ErrorCode::kInternal, "assembled marginals differ");
  return d;
}

std::vector<std::pair<Rational, Rational>> marginal(const Distribution& d, std::size_t i) {
  std::map<Rational, Rational> acc;
  for (std::size_t k = 0; k < d.support.size(); ++k) acc[d.support[k].at(i)] += d.probabilities[k];
  std::vector<std::pair<Rational, Rational>> out;
  for (auto& [v, p] : acc)
    if (p != 0) out.emplace_back(v, p);
  return out;
}

bool validate_distribution(const Coefficients& c, const Distribution& d) {
  if (d.support.empty() || d.support.size() != d.probabilities.size()) return false;
  Rational total = 0;
  for (std::size_t k = 0; k < d.support.size(); ++k) {
    if (d.support[k].size() != c.size() || d.probabilities[k] <= 0) return false;
    if (!on_relation<Rational>(c, d.support[k])) return false;
    total += d.probabilities[k];
  }
  if (total != 1) return false;
  const auto m0 = marginal(d, 0);
  for (std::size_t i = 1; i < c.size(); ++i)
    if (marginal(d, i) != m0) return false;
  return true;
}

MatrixWitness matrix_witness_from_rows(const Coefficients& c, IntMatrix m) {
  const std::size_t n = c.size(), rows = m.rows();
  if (m.cols() != n) fail(ErrorCode::kDomain, "witness matrix must have one column per coefficient");
  if (rows == 0) fail(ErrorCode::kDomain, "empty witness matrix");
  MatrixWitness w;
  w.reference = m.column(0);
  std::sort(w.reference.begin(), w.reference.end());
  w.permutations.assign(n, std::vector<std::size_t>(rows));
  std::vector<std::size_t> order(rows);
  for (std::size_t i = 0; i < n; ++i) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return m(x, i) < m(y, i); });
    for (std::size_t k = 0; k < rows; ++k) {
      if (m(order[k], i) != w.reference[k]) fail(ErrorCode::kDomain, "columns are not permutations of each other");
      w.permutations[i][order[k]] = k;
    }
  }
  w.m = std::move(m);
  return w;
}

MatrixWitness to_matrix_witness(const Coefficients& c, const Distribution& d) {
  if (d.trivial) fail(ErrorCode::kDomain, "trivial distribution has no nonzero witness");
  if (!validate_distribution(c, d)) fail(ErrorCode::kDomain, "distribution fails the relation or marginal check");
  const std::size_t n = c.size();

  const BigInt lp = lcm_of_denominators(d.probabilities);
  std::vector<BigInt> mult;
  for (const auto& p : d.probabilities) mult.push_back(p.get_num() * (lp / p.get_den()));
  const BigInt gm = gcd_of(mult);
  for (auto& x : mult) x /= gm;

  std::vector<Rational> coords;
  for (const auto& x : d.support) coords.insert(coords.end(), x.begin(), x.end());
  const BigInt lc = lcm_of_denominators(coords);

  BigInt total = 0;
  for (const auto& x : mult) total += x;
  if (total > BigInt(static_cast<unsigned long>(kDefaultMaxPoints)))
    fail(ErrorCode::kResource, "witness matrix would exceed the row cap");
  IntMatrix m(total.get_ui(), n);
  std::size_t r = 0;
  for (std::size_t k = 0; k < d.support.size(); ++k)
    for (BigInt t = 0; t < mult[k]; ++t, ++r)
      for (std::size_t i = 0; i < n; ++i) m(r, i) = d.support[k][i].get_num() * (lc / d.support[k][i].get_den());

  MatrixWitness w = matrix_witness_from_rows(c, std::move(m));
  w.determinant_checked = w.m.rows() <= kDeterminantLimit;
  if (!check_matrix_witness(c, w)) fail(ErrorCode::kInternal, "matrix witness failed its own check");
  return w;
}

WitnessCheck verify_witness(const Coefficients& c, const IntMatrix& m) {
  const std::size_t n = c.size();
  if (m.cols() != n) fail(ErrorCode::kDomain, "witness matrix must have one column per coefficient");
  WitnessCheck out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!on_relation<BigInt>(c, m.row(r))) {
      out.failing_row = r;
      std::ostringstream os;
      os << "row " << r + 1 << " violates the relation";
      out.diagnostic = os.str();
      return out;
    }
  auto sorted_col = [&](std::size_t i) {
    auto col = m.column(i);
    std::sort(col.begin(), col.end());
    return col;
  };
  const auto ref = sorted_col(0);
  for (std::size_t i = 1; i < n; ++i) {
    const auto col = sorted_col(i);
    if (col == ref) continue;
    out.failing_column = i;
    // First value whose multiplicities differ.
    std::map<BigInt, long> diff;
    for (const auto& x : ref) ++diff[x];
    for (const auto& x : col) --diff[x];
    std::ostringstream os;
    for (const auto& [v, cnt] : diff)
      if (cnt != 0) {
        os << "column " << i + 1 << " differs from column 1 at value " << v.get_str() << " (count difference " << cnt
           << ")";
        break;
      }
    out.diagnostic = os.str();
    return out;
  }
  out.valid = true;
  out.trivial = std::all_of(ref.begin(), ref.end(), [](const BigInt& x) { return x == 0; });
  if (out.trivial) out.diagnostic = "all entries are zero";
  return out;
}

IntMatrix permutation_combination(const Coefficients& c, const MatrixWitness& w) {
  const std::size_t rows = w.m.rows();
  IntMatrix s(rows, rows);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t r = 0; r < rows; ++r) s(r, w.permutations[i][r]) += c[i];
  return s;
}

bool check_matrix_witness(const Coefficients& c, const MatrixWitness& w, std::size_t det_limit) {
  const std::size_t n = c.size(), rows = w.m.rows();
  if (w.m.cols() != n || w.permutations.size() != n || w.reference.size() != rows) return false;
  if (!verify_witness(c, w.m).valid) return false;
  if (!std::is_sorted(w.reference.begin(), w.reference.end())) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = w.permutations[i];
    if (p.size() != rows) return false;
    std::vector<char> seen(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (p[r] >= rows || seen[p[r]]) return false;
      seen[p[r]] = 1;
      if (w.m(r, i) != w.reference[p[r]]) return false;
    }
  }
  // (sum a_i Pi_i) v = sum a_i * column i, zero row by row.
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt s = 0;
    for (std::size_t i = 0; i < n; ++i) s += c[i] * w.reference[w.permutations[i][r]];
    if (s != 0) return false;
  }
  if (rows <= det_limit && determinant(permutation_combination(c, w)) != 0) return false;
  return true;
}

MatrixWitness solve_n2(const Coefficients& c) {
  if (c.size() != 2) fail(ErrorCode::kDomain, "solve_n2 needs exactly two coefficients");
  if (!decide(c).solvable) fail(ErrorCode::kFeasibility, "local conditions fail");
  IntMatrix m;
  if (c[0] == -c[1])
    m = IntMatrix{{1, 1}};
  else
    m = IntMatrix{{1, -1}, {-1, 1}};
  MatrixWitness w = matrix_witness_from_rows(c, std::move(m));
  w.determinant_checked = true;
  if (!check_matrix_witness(c, w)) fail(ErrorCode::kInternal, "n = 2 witness failed its own check");
  return w;
}

MatrixWitness solve_boundary(const Coefficients& c) {
  if (!decide(c).solvable) fail(ErrorCode::kFeasibility, "local conditions fail");
  if (!is_real_boundary(c)) fail(ErrorCode::kDomain, "instance is not on the real boundary");
  const std::size_t n = c.size();
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (abs(c[i]) > abs(c[k])) k = i;
  IntMatrix m(2, n);
  for (std::size_t i = 0; i < n; ++i) {
    // Zero coefficients take +1 so every column is {1, -1}.
    int eps = sign_of(c[i]) == 0 ? 1 : sign_of(c[i]);
    if (i == k) eps = -eps;
    m(0, i) = eps;
    m(1, i) = -eps;
  }
  MatrixWitness w = matrix_witness_from_rows(c, std::move(m));
  w.determinant_checked = true;
  if (!check_matrix_witness(c, w)) fail(ErrorCode::kInternal, "boundary witness failed its own check");
  return w;
}

std::string witness_csv(const MatrixWitness& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.m.cols(); ++i) os << (i ? "," : "") << "x" << (i + 1);
  os << "\n";
  for (std::size_t r = 0; r < w.m.rows(); ++r) {
    for (std::size_t i = 0; i < w.m.cols(); ++i) os << (i ? "," : "") << w.m(r, i).get_str();
    os << "\n";
  }
  return os.str();
}

}  // namespace smyth

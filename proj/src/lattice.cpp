#include "smyth/lattice.hpp"

#include "smyth/error.hpp"
#include "smyth/linear_algebra.hpp"

namespace smyth {

void LatticeModel::values(std::span<const std::int64_t> c, std::span<std::int64_t> out) const {
  for (std::size_t i = 0; i < forms.size(); ++i) {
    std::int64_t s = 0;
    const auto& f = forms[i];
    for (std::size_t k = 0; k < f.size(); ++k) s += c[k] * f[k];
    out[i] = s;
  }
}

std::vector<std::int64_t> LatticeModel::values(std::span<const std::int64_t> c) const {
  std::vector<std::int64_t> out(forms.size());
  values(c, out);
  return out;
}

std::vector<Rational> LatticeModel::form(std::size_t i) const {
  std::vector<Rational> out;
  out.reserve(rank());
  for (auto x : forms.at(i)) out.emplace_back(static_cast<long>(x));
  return out;
}

BigInt LatticeModel::form_content(std::size_t i) const {
  BigInt g = 0;
  for (auto x : forms.at(i)) {
    const BigInt v(static_cast<long>(x));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

LatticeModel hyperplane_lattice(const Coefficients& c) {
  const std::size_t n = c.size();
  IntMatrix basis = hnf_kernel_basis(c.a());
  // Keep entries far from int64 overflow in shell value computations.
  const BigInt limit = BigInt(1) << 31;
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    BigInt dot = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (abs(basis(k, i)) >= limit) fail(ErrorCode::kResource, "kernel basis entries too large for shell enumeration");
      dot += basis(k, i) * c[i];
    }
    if (dot != 0) fail(ErrorCode::kInternal, "kernel basis row violates the relation");
  }
  if (!kernel_basis(to_rational(basis.transpose())).empty())
    fail(ErrorCode::kInternal, "kernel basis rows are dependent");

  LatticeModel m{c, basis, {}};
  m.forms.assign(n, std::vector<std::int64_t>(basis.rows()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < basis.rows(); ++k) m.forms[i][k] = to_int64(basis(k, i));
  return m;
}

}  // namespace smyth

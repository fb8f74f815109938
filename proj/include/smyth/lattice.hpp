#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smyth/local_conditions.hpp"
#include "smyth/matrix.hpp"

namespace smyth {

/// The kernel lattice of sum a_i x_i = 0 with its coordinate forms.
///
/// A point with basis coordinates c (length n-1) is the integer vector
/// c^T * basis; its i-th coordinate is the form L_i(c) = sum_k c_k basis(k, i).
struct LatticeModel {
  Coefficients coeffs;
  IntMatrix basis;                                 // (n-1) x n, Hermite normal form
  std::vector<std::vector<std::int64_t>> forms;    // forms[i][k] = basis(k, i)

  std::size_t arity() const noexcept { return forms.size(); }
  std::size_t rank() const noexcept { return basis.rows(); }

  void values(std::span<const std::int64_t> c, std::span<std::int64_t> out) const;
  std::vector<std::int64_t> values(std::span<const std::int64_t> c) const;
  /// Form L_i as a rational column vector.
  std::vector<Rational> form(std::size_t i) const;
  /// gcd of the coefficients of L_i; L_i(Lambda) = gcd * Z.
  BigInt form_content(std::size_t i) const;
};

LatticeModel hyperplane_lattice(const Coefficients& c);

}  // namespace smyth

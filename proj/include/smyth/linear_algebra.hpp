#pragma once

#include <optional>
#include <span>
#include <vector>

#include "smyth/matrix.hpp"

namespace smyth {

/// Basis of {x in Z^n : sum a_i x_i = 0} as the rows of an (n-1) x n matrix in
/// row Hermite normal form. Requires a != 0 and content(a) == 1.
IntMatrix hnf_kernel_basis(std::span<const BigInt> a);

/// Row Hermite normal form of an integer matrix with independent rows:
/// pivots positive, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix m);

/// Fraction-free (Bareiss) determinant.
Rational determinant(const RatMatrix& m);
BigInt determinant(const IntMatrix& m);

struct LinearSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;  // basis of {x : Mx = 0}
};

/// Exact solution of Mx = b, or nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const RatMatrix& m, std::span<const Rational> b);

/// Kernel basis of M (the homogeneous part of solve_linear).
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

RatMatrix inverse(const RatMatrix& m);

/// Q = U^T diag(d) U with U unit upper triangular, computed without pivoting.
/// Empty when a pivot vanishes before the last row.
struct LdltFactor {
  RatMatrix upper;               // unit upper triangular U
  std::vector<Rational> diagonal;
};
std::optional<LdltFactor> ldlt(const RatMatrix& q);

bool is_positive_definite(const RatMatrix& q);

/// Leading principal minors det(Q[0..k, 0..k]) for k = 1..n.
std::vector<Rational> leading_principal_minors(const RatMatrix& q);

}  // namespace smyth

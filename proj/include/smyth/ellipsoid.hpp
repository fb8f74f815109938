#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smyth/lattice.hpp"
#include "smyth/matrix.hpp"

namespace smyth {

/// Rational positive-definite Gram matrix Q on the lattice coordinates whose
/// dual P = Q^{-1} gives every coordinate form the same value mu_sq.
struct EllipsoidForm {
  RatMatrix q;
  RatMatrix p;
  Rational mu_sq;
  BigInt denominator_bound;  // bound that produced the accepted rounding
};

/// Requires decide(m.coeffs).solvable, n >= 3 and strict real inequality
/// (2 max|a_i| < sum|a_i|). P is scaled so that mu_sq == 1.
EllipsoidForm dual_constrained_form(const LatticeModel& m);

/// Exact checks: Q and P inverse to each other, P positive definite, P(L_i) == mu_sq for all i.
bool verify_dual_form(const LatticeModel& m, const EllipsoidForm& e);

/// Gram matrix of the basis rows: c^T Q c = |c^T basis|_2^2 in Z^n.
RatMatrix euclidean_gram(const LatticeModel& m);

inline constexpr std::size_t kDefaultMaxPoints = 10'000'000;

/// Lattice points c in Z^(n-1) with c^T Q c <= D^2 and their form values,
/// sorted lexicographically by c.
class PointShell {
 public:
  PointShell(Rational dilation, std::size_t rank, std::size_t arity)
      : dilation_(std::move(dilation)), rank_(rank), arity_(arity) {}

  const Rational& dilation() const noexcept { return dilation_; }
  std::size_t size() const noexcept { return rank_ == 0 ? 0 : coords_.size() / rank_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t arity() const noexcept { return arity_; }
  std::span<const std::int64_t> point(std::size_t k) const { return {coords_.data() + k * rank_, rank_}; }
  std::span<const std::int64_t> values(std::size_t k) const { return {values_.data() + k * arity_, arity_}; }

  void push(std::span<const std::int64_t> c, std::span<const std::int64_t> v) {
    coords_.insert(coords_.end(), c.begin(), c.end());
    values_.insert(values_.end(), v.begin(), v.end());
  }
  /// Sorted distinct images L_i(shell).
  std::vector<std::int64_t> image(std::size_t i) const;

 private:
  Rational dilation_;
  std::size_t rank_, arity_;
  std::vector<std::int64_t> coords_;
  std::vector<std::int64_t> values_;
};

/// Exact Fincke-Pohst enumeration; throws kResource when more than max_points
/// points would be produced.
PointShell enumerate_shell(const LatticeModel& m, const RatMatrix& q, const Rational& dilation,
                           std::size_t max_points = kDefaultMaxPoints);
PointShell enumerate_shell(const LatticeModel& m, const EllipsoidForm& e, const Rational& dilation,
                           std::size_t max_points = kDefaultMaxPoints);

/// Per-point relation, symmetry under c -> -c and value injectivity.
bool validate_shell(const LatticeModel& m, const PointShell& shell);

struct DilationResult {
  Rational dilation;
  PointShell shell;
  std::vector<Rational> attempted;  // every D enumerated, in order
};

/// First D in d0, 2 d0, 4 d0, ... (up to max_dilation) where all images L_i(shell) coincide.
DilationResult equal_image_dilation(const LatticeModel& m, const EllipsoidForm& e, const Rational& d0,
                                    const Rational& max_dilation, std::size_t max_points = kDefaultMaxPoints);

/// max over y and pairs i, j of |#{c : L_i(c) = y} - #{c : L_j(c) = y}| (uniform weights).
std::uint64_t vertex_count_discrepancy(const PointShell& shell);

/// CSV with header c1..c_{n-1},L1..Ln.
std::string shell_csv(const PointShell& shell);

}  // namespace smyth

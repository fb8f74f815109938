#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "smyth/local_conditions.hpp"
#include "smyth/rational.hpp"

namespace smyth {

struct RealConfiguration {
  std::vector<std::vector<double>> vectors;  // b_1..b_m, each of dimension d
  double residual = 0.0;                     // |sum b_i|
};

/// Planar vectors with prescribed Euclidean lengths summing to zero, built by
/// the split-and-glue recursion (lengths sorted descending and dealt out
/// alternately, auxiliary length at the midpoint of the admissible interval).
/// Coordinates beyond the plane are zero. Requires 2 max <= sum, else kFeasibility.
RealConfiguration converse_triangle_real(std::span<const Rational> lengths, std::size_t dim = 2);

/// Same construction; bit k of `reflect_mask` mirrors the second half at the
/// k-th glue step (depth-first order). Different masks give different polygons.
RealConfiguration converse_triangle_real(std::span<const double> lengths, std::size_t dim,
                                         std::uint64_t reflect_mask);

/// Exact vectors in Q^dim with max-coordinate p-adic norm p^{-v_i} summing to
/// zero. nullopt valuations (+infinity) give zero vectors. Requires the
/// minimum finite valuation to occur at least twice.
std::vector<std::vector<Rational>> converse_triangle_nonarch(std::span<const std::optional<long>> valuations,
                                                             const BigInt& p, std::size_t dim = 2);

/// max_k |x_k|_p expressed as the valuation min_k v_p(x_k); nullopt for the zero vector.
std::optional<long> padic_vector_valuation(std::span<const Rational> x, const BigInt& p);

struct LocalUniformResult {
  bool identical = false;
  BigInt modulus;                                  // p^k
  std::vector<std::vector<std::uint64_t>> counts;  // counts[i][y] = #{c : L_i(c) = y mod p^k}
};

/// Pushes the uniform measure on (Z/p^k)^(n-1), in kernel lattice basis
/// coordinates, forward along each unit-normalized L_i and compares the results.
LocalUniformResult local_uniform_check(const Coefficients& c, const BigInt& p, unsigned k);

}  // namespace smyth

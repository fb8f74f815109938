#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace smyth {

using IntVec = std::vector<std::int64_t>;

/// Sparse integer row: (column, coefficient) pairs.
using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Z-basis of {x in Z^cols : row . x = 0 for every row}, by row-at-a-time
/// unimodular elimination. nullopt if an entry would leave int64.
std::optional<std::vector<IntVec>> integer_kernel(const std::vector<SparseRow>& rows, std::size_t cols);

/// LLL reduction in place (floating Gram-Schmidt, exact integer updates).
/// Vectors must be linearly independent. Returns false on int64 overflow,
/// leaving `basis` a valid but possibly partly reduced basis of the same lattice.
bool lll_reduce(std::vector<IntVec>& basis, double delta = 0.99);

/// Babai nearest-plane approximation of the lattice point closest to target.
/// nullopt on overflow.
std::optional<IntVec> nearest_plane(const std::vector<IntVec>& basis, std::span<const double> target);

}  // namespace smyth

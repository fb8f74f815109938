#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "smyth/local_conditions.hpp"
#include "smyth/matrix.hpp"

namespace smyth::test {

inline Coefficients coeffs(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return Coefficients::normalize(v);
}

inline Coefficients coeffs(const std::vector<long>& xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return Coefficients::normalize(v);
}

// 8x3: columns of the 3x8 matrix with rows (3,-3,4,-4,5,-5,0,0), (4,-4,-3,3,0,0,5,-5), (-5,5,0,0,-3,3,-4,4).
inline IntMatrix matrix_a_rows() {
  const long t[3][8] = {{3, -3, 4, -4, 5, -5, 0, 0}, {4, -4, -3, 3, 0, 0, 5, -5}, {-5, 5, 0, 0, -3, 3, -4, 4}};
  IntMatrix m(8, 3);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t i = 0; i < 3; ++i) m(r, i) = t[i][r];
  return m;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

}  // namespace smyth::test

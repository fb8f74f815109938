#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smyth/rational.hpp"

namespace smyth {

/// Primitive integer relation vector a (n >= 2) and the rationals it came from.
class Coefficients {
 public:
  /// Scales `input` by the unique positive rational making it primitive integral.
  static Coefficients normalize(const std::vector<Rational>& input);

  const std::vector<BigInt>& a() const noexcept { return a_; }
  const std::vector<Rational>& original() const noexcept { return original_; }
  std::size_t size() const noexcept { return a_.size(); }
  const BigInt& operator[](std::size_t i) const { return a_[i]; }

  friend bool operator==(const Coefficients& x, const Coefficients& y) { return x.a_ == y.a_; }

 private:
  Coefficients(std::vector<BigInt> a, std::vector<Rational> original)
      : a_(std::move(a)), original_(std::move(original)) {}

  std::vector<BigInt> a_;
  std::vector<Rational> original_;
};

struct RealPlace {
  friend bool operator==(RealPlace, RealPlace) { return true; }
};
using Place = std::variant<RealPlace, BigInt>;

std::string place_name(const Place& place);

struct PlaceReport {
  Place place;
  bool holds = true;
  /// 0-based index of the violated inequality (first one in index order).
  std::optional<std::size_t> violating_index;
  // Inequality sides at violating_index (or at the tightest index when holding).
  // Real place: |a_i| <= sum_{j != i} |a_j|. p-adic: v_p(a_i) >= min_{j != i} v_p(a_j),
  // with std::nullopt standing for +infinity.
  std::size_t detail_index = 0;
  Rational real_lhs, real_rhs;
  std::optional<long> valuation_lhs, valuation_rhs;
};

struct Decision {
  bool solvable = true;
  std::vector<PlaceReport> reports;  // real place first, then primes ascending
};

std::vector<BigInt> relevant_primes(const Coefficients& c);
PlaceReport check_place(const Coefficients& c, const Place& place);
Decision decide(const Coefficients& c);

/// 2 max|a_i| == sum |a_i|: the real condition holds with equality.
bool is_real_boundary(const Coefficients& c);

}  // namespace smyth

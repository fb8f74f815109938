#include "smyth/local_conditions.hpp"

#include <algorithm>

#include "smyth/error.hpp"
#include "smyth/number_theory.hpp"

namespace smyth {

Coefficients Coefficients::normalize(const std::vector<Rational>& input) {
  if (input.size() < 2) fail(ErrorCode::kDomain, "need at least two coefficients");
  const BigInt l = lcm_of_denominators(input);
  std::vector<BigInt> ints;
  ints.reserve(input.size());
  for (const auto& x : input) ints.push_back(x.get_num() * (l / x.get_den()));
  const BigInt g = gcd_of(ints);
  if (g == 0) fail(ErrorCode::kDomain, "coefficient vector is zero");
  for (auto& x : ints) x /= g;
  return Coefficients(std::move(ints), input);
}

std::string place_name(const Place& place) {
  if (std::holds_alternative<RealPlace>(place)) return "real";
  return to_string(std::get<BigInt>(place));
}

std::vector<BigInt> relevant_primes(const Coefficients& c) {
  std::vector<BigInt> primes;
  for (const auto& x : c.a()) {
    if (x == 0) continue;
    for (auto& p : prime_factors(x)) primes.push_back(std::move(p));
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

namespace {

// Valuations compare with nullopt as +infinity.
bool val_less(const std::optional<long>& x, const std::optional<long>& y) {
  if (!x) return false;
  if (!y) return true;
  return *x < *y;
}

PlaceReport check_real(const Coefficients& c) {
  PlaceReport rep;
  rep.place = RealPlace{};
  BigInt total = 0;
  for (const auto& x : c.a()) total += abs(x);
  std::size_t tightest = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (abs(c[i]) > abs(c[tightest])) tightest = i;
    const BigInt rest = total - abs(c[i]);
    if (abs(c[i]) > rest && !rep.violating_index) {
      rep.holds = false;
      rep.violating_index = i;
    }
  }
  rep.detail_index = rep.violating_index.value_or(tightest);
  rep.real_lhs = Rational(abs(c[rep.detail_index]));
  rep.real_rhs = Rational(total - abs(c[rep.detail_index]));
  return rep;
}

PlaceReport check_prime(const Coefficients& c, const BigInt& p) {
  PlaceReport rep;
  rep.place = p;
  std::vector<std::optional<long>> v;
  v.reserve(c.size());
  for (const auto& x : c.a()) v.push_back(padic_valuation(x, p));
  auto min_excluding = [&](std::size_t i) {
    std::optional<long> m;
    bool first = true;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j == i) continue;
      if (first || val_less(v[j], m)) m = v[j];
      first = false;
    }
    return m;
  };
  std::size_t tightest = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (val_less(v[i], v[tightest])) tightest = i;
    // |a_i|_p <= max_{j != i} |a_j|_p  <=>  v_p(a_i) >= min_{j != i} v_p(a_j)
    if (val_less(v[i], min_excluding(i)) && !rep.violating_index) {
      rep.holds = false;
      rep.violating_index = i;
    }
  }
  rep.detail_index = rep.violating_index.value_or(tightest);
  rep.valuation_lhs = v[rep.detail_index];
  rep.valuation_rhs = min_excluding(rep.detail_index);
  return rep;
}

}  // namespace

PlaceReport check_place(const Coefficients& c, const Place& place) {
  if (std::holds_alternative<RealPlace>(place)) return check_real(c);
  return check_prime(c, std::get<BigInt>(place));
}

Decision decide(const Coefficients& c) {
  Decision d;
  d.reports.push_back(check_real(c));
  for (const auto& p : relevant_primes(c)) d.reports.push_back(check_prime(c, p));
  d.solvable = std::all_of(d.reports.begin(), d.reports.end(), [](const PlaceReport& r) { return r.holds; });
  return d;
}

bool is_real_boundary(const Coefficients& c) {
  BigInt total = 0, top = 0;
  for (const auto& x : c.a()) {
    total += abs(x);
    if (abs(x) > top) top = abs(x);
  }
  return 2 * top == total;
}

}  // namespace smyth

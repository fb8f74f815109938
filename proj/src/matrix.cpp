#include "smyth/matrix.hpp"

namespace smyth {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::vector<Rational> multiply(const RatMatrix& m, std::span<const Rational> x) {
  if (x.size() != m.cols()) fail(ErrorCode::kDomain, "matrix-vector dimension mismatch");
  std::vector<Rational> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

Rational bilinear(const RatMatrix& m, std::span<const Rational> x, std::span<const Rational> y) {
  if (!m.square() || x.size() != m.rows() || y.size() != m.cols())
    fail(ErrorCode::kDomain, "bilinear form dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    Rational t = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) t += m(i, j) * y[j];
    s += x[i] * t;
  }
  return s;
}

}  // namespace smyth

#include "smyth/figure.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "smyth/ellipsoid.hpp"
#include "smyth/error.hpp"
#include "smyth/linear_algebra.hpp"

namespace smyth {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

}  // namespace

std::string figure_svg(const Coefficients& c, const Rational& dilation, const std::string& version) {
  if (c.size() != 3) fail(ErrorCode::kDomain, "figure needs exactly three coefficients");
  if (dilation <= 0) fail(ErrorCode::kDomain, "dilation must be positive");
  const LatticeModel m = hyperplane_lattice(c);
  const Decision d = decide(c);
  const bool dual = d.solvable && !is_real_boundary(c);
  const RatMatrix q = dual ? dual_constrained_form(m).q : euclidean_gram(m);
  const PointShell shell = enumerate_shell(m, q, dilation);

  // Axes: the first pair of forms that are independent on the lattice.
  std::size_t ix = 0, iy = 1;
  auto det2 = [&](std::size_t i, std::size_t j) {
    return m.forms[i][0] * m.forms[j][1] - m.forms[i][1] * m.forms[j][0];
  };
  if (det2(0, 1) == 0) {
    if (det2(0, 2) != 0) {
      iy = 2;
    } else {
      ix = 1;
      iy = 2;
    }
  }
  const std::size_t iz = 3 - ix - iy;
  // Basis coordinates -> plot plane.
  const double t00 = static_cast<double>(m.forms[ix][0]), t01 = static_cast<double>(m.forms[ix][1]);
  const double t10 = static_cast<double>(m.forms[iy][0]), t11 = static_cast<double>(m.forms[iy][1]);

  // Ellipse boundary: c = D R^{-1} u with Q = R^T R (2 x 2 Cholesky).
  const double q00 = to_double(q(0, 0)), q01 = to_double(q(0, 1)), q11 = to_double(q(1, 1));
  const double r00 = std::sqrt(q00), r01 = q01 / r00, r11 = std::sqrt(q11 - r01 * r01);
  const double dd = to_double(dilation);
  std::vector<std::array<double, 2>> outline;
  double extent = 1.0;
  for (int k = 0; k <= 240; ++k) {
    const double th = 2.0 * M_PI * k / 240.0;
    const double u0 = dd * std::cos(th), u1 = dd * std::sin(th);
    const double c1 = u1 / r11, c0 = (u0 - r01 * c1) / r00;
    const double x = t00 * c0 + t01 * c1, y = t10 * c0 + t11 * c1;
    outline.push_back({x, y});
    extent = std::max({extent, std::abs(x), std::abs(y)});
  }
  extent *= 1.08;

  const double size = 640.0, half = size / 2.0, scale = half / extent;
  auto sx = [&](double x) { return half + x * scale; };
  auto sy = [&](double y) { return half - y * scale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<!-- smyth " << version << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n";
  os << "<title>";
  for (std::size_t i = 0; i < 3; ++i) os << (i ? " + " : "") << c[i].get_str() << " L" << (i + 1);
  os << " = 0, D = " << to_string(dilation) << (dual ? "" : " (euclidean form)") << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<defs><clipPath id=\"view\"><rect width=\"" << size << "\" height=\"" << size << "\"/></clipPath></defs>\n";

  // Integer level lines, thinned so at most ~40 per form are drawn.
  const long range = static_cast<long>(std::ceil(extent));
  const long step = std::max(1L, range / 20);
  const std::array<const char*, 3> colour{"#c0392b", "#2471a3", "#229954"};
  os << "<g clip-path=\"url(#view)\" stroke-width=\"0.6\" opacity=\"0.45\">\n";
  for (long v = -range - range % step; v <= range; v += step) {
    os << "<line x1=\"" << fmt(sx(v)) << "\" y1=\"0\" x2=\"" << fmt(sx(v)) << "\" y2=\"" << size << "\" stroke=\""
       << colour[ix] << "\"/>\n";
    os << "<line x1=\"0\" y1=\"" << fmt(sy(v)) << "\" x2=\"" << size << "\" y2=\"" << fmt(sy(v)) << "\" stroke=\""
       << colour[iy] << "\"/>\n";
    // a_x x + a_y y + a_z v = 0.
    const double ax = c[ix].get_d(), ay = c[iy].get_d(), az = c[iz].get_d();
    if (ay != 0) {
      const double y0 = (-az * v + ax * extent) / ay, y1 = (-az * v - ax * extent) / ay;
      os << "<line x1=\"" << fmt(sx(-extent)) << "\" y1=\"" << fmt(sy(y0)) << "\" x2=\"" << fmt(sx(extent))
         << "\" y2=\"" << fmt(sy(y1)) << "\" stroke=\"" << colour[iz] << "\"/>\n";
    } else if (ax != 0) {
      const double x0 = -az * v / ax;
      os << "<line x1=\"" << fmt(sx(x0)) << "\" y1=\"0\" x2=\"" << fmt(sx(x0)) << "\" y2=\"" << size
         << "\" stroke=\"" << colour[iz] << "\"/>\n";
    }
  }
  os << "</g>\n";

  os << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < outline.size(); ++k)
    os << (k ? " " : "") << fmt(sx(outline[k][0])) << "," << fmt(sy(outline[k][1]));
  os << "\"/>\n";

  const double radius = std::clamp(scale * 0.18, 0.8, 4.0);
  os << "<g fill=\"black\">\n";
  for (std::size_t k = 0; k < shell.size(); ++k) {
    const auto v = shell.values(k);
    os << "<circle cx=\"" << fmt(sx(static_cast<double>(v[ix]))) << "\" cy=\"" << fmt(sy(static_cast<double>(v[iy])))
       << "\" r=\"" << fmt(radius) << "\"/>\n";
  }
  os << "</g>\n";
  os << "<text x=\"8\" y=\"18\" font-family=\"sans-serif\" font-size=\"13\">x = L" << (ix + 1) << ", y = L"
     << (iy + 1) << ", " << shell.size() << " points</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace smyth

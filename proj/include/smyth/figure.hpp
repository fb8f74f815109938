#pragma once

#include <string>

#include "smyth/local_conditions.hpp"
#include "smyth/rational.hpp"

namespace smyth {

/// Static SVG of the shell for n = 3, drawn in the plane of two coordinate
/// forms (x = L_i, y = L_j): the ellipse Q = D^2, its lattice points and
/// integer level lines of all three forms. Uses the dual constrained form when
/// it exists, else the Euclidean one (noted in the output). Refuses n != 3.
std::string figure_svg(const Coefficients& c, const Rational& dilation, const std::string& version);

}  // namespace smyth

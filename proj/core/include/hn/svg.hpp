#pragma once

#include "hn/polytope.hpp"

#include <string>
#include <vector>

namespace hn {

// Deterministic SVG drawing of the (ax, ay) projections of the pieces: one
// element per piece in input order (polygon, line, or dot depending on the
// projected hull's dimension), numbers at 12 significant digits.
std::string emit_svg(const std::vector<RatPolytope>& pieces, int ax, int ay);

}  // namespace hn

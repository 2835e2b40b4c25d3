#pragma once

#include <string>

#include "tropical/matrix.hpp"

namespace tropical {

/// Draws the column space of an idempotent as an SVG document.
///
/// 3×3 strongly regular idempotents are drawn projectivised to
/// (x1 − x3, x2 − x3): the polytrope polygon, its extremal generators as
/// dots and the origin as a cross. 2×2 idempotents are drawn in the plane
/// itself as the band (or line) between gradient-1 lines. The output depends
/// only on the matrix, byte for byte.
std::string render_svg(const TropMatrix& e);

}  // namespace tropical

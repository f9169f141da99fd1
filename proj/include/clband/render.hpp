#pragma once

/// SVG rendering of an arrangement with face labels. Presentation only:
/// coordinates are floating-point approximations of the exact data.

#include "clband/cell_complex.hpp"

#include <string>

namespace clband {

std::string render_svg(const FaceComplex& fc);

}  // namespace clband

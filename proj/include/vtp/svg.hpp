#pragma once

#include "vtp/builder.hpp"

#include <string>

namespace vtp {

struct SvgOptions {
    int size = 800;          // pixels, square canvas
    double sphere_cap = 0.4; // spherical balls: drop points with z above this
};

// Draws the closed faces filled by face color and every edge as a geodesic.
// Needs a ball built with coordinates.
std::string render_svg(const GraphBall &ball, const SvgOptions &opt = {});

} // namespace vtp

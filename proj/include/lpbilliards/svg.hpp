// SVG rendering of one orbit: the L^p boundary polyline (1024 segments), the
// closed orbit polygon (exactly one closed <path>), vertex marks, and a label
// with the Morse signature and rotation number. Output is deterministic for
// fixed input (all numbers use shortest round-trip formatting).
#pragma once

#include <string>

#include <Eigen/Dense>

#include "lpbilliards/geometry.hpp"

namespace lpb {

std::string orbit_svg(const BoundarySpec& spec, const Eigen::VectorXd& theta);

}  // namespace lpb

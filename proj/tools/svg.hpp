#pragma once

#include <string>

#include "andgraph/realization.hpp"

namespace andgraph::cli {

/// Two panels side by side: every vertex as a horizontal interval with its
/// point (first dimension), and the corner boxes of the first dimension with
/// the diagonal x + y = 0. Output depends only on the coordinates.
std::string render_svg(const Realization& r);

}  // namespace andgraph::cli

#pragma once

#include <string>

#include "gdifs/graph.hpp"

namespace gdifs {

struct RenderSpec {
  unsigned levels = 5;
  Rational width{1000};
  Rational row_height{12};
  Rational row_gap{6};
  Rational margin_left{60};
};

// Exact half-even rounding of x to three decimals, printed with all three.
std::string fixed3(const Rational& x);

// SVG 1.1: for each vertex, rows for levels 0..levels, one <rect> per level-k
// interval (class "level-k"). Byte-identical for identical input.
std::string render_svg(const GraphIFS& ifs, const RenderSpec& spec = {},
                       std::uint64_t cap = kDefaultPathCap);

}  // namespace gdifs

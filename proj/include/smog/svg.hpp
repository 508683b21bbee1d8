#pragma once

#include <iosfwd>

#include "smog/drawing.hpp"

namespace smog {

struct SvgOptions {
  double scale = 40;  // pixels per drawing unit
  double margin = 20;
  double vertex_size = 6;
};

// Coordinates are printed with six decimals; output is a pure function of the drawing and options.
void write_svg(std::ostream& out, const Drawing& d, const SvgOptions& opt = {});

}  // namespace smog

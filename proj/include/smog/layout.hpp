#pragma once

#include <functional>
#include <string>
#include <vector>

#include "smog/drawing.hpp"
#include "smog/graph.hpp"

namespace smog {

enum class EdgeColor { Base, Blue, Green, Red };
const char* color_name(EdgeColor c);

class LayoutError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Drawing whose edges run from the earlier to the later vertex of the canonical order,
// together with the colouring assigned while inserting vertices.
struct Layout {
  Drawing drawing;
  std::vector<EdgeColor> colors;
  CanonicalOrder order;
};

// Edge shape determined by its endpoints: leave `lower` vertically, reach `upper` horizontally.
// Vertical part of length dy - dx then an arc of radius dx if dy >= dx, else an arc of radius dy
// then a horizontal part of length dx - dy. Octilinear shapes use the chord of the arc.
std::vector<Primitive> edge_shape(const Point& lower, const Point& upper, Model model);
void reshape(Layout& l);

// Called after vertex v_k has been placed, with the coordinates of G_k.
using StepHook = std::function<void(int k, const std::vector<Point>& coords)>;

Layout layout_smooth(const PlanarGraph& g, const CanonicalOrder& order, const StepHook& hook = {});

// Empty string iff every contour edge of G_k other than (v1, v2) joins two points on a slope +-1 line
// and (v1, v2) is horizontal.
std::string contour_condition_violation(const PlanarGraph& g, const CanonicalOrder& order, int k,
                                        const std::vector<Point>& coords);

Drawing to_octilinear(const Drawing& d);
Layout to_octilinear(const Layout& l);

struct CutRecord {
  int upper, lower;
  Rational delta;
  Rational cut_x;
  Rational epsilon;
  bool mirrored;  // cut right of the upper vertex
};

struct StretchTrace {
  std::vector<CutRecord> cuts;
  std::vector<Drawing> after_cut;  // filled when record_drawings is set
  bool record_drawings = false;
  // Called after every cut with the current layout; may throw to abort.
  std::function<void(const Layout&, const CutRecord&)> on_cut;
};

// Fraction of the smallest positive x-gap used as the cut offset; SMOG_CUT_EPSILON overrides 1/2.
Rational cut_epsilon_fraction();

Layout stretch_horizontal(const Layout& in, StretchTrace* trace = nullptr);
Layout stretch_vertical(const Layout& in);
Layout layout_refined(const PlanarGraph& g, StretchTrace* trace = nullptr);

// Red edges with both a vertical segment and an arc of nonzero radius.
std::vector<int> red_edges_with_vertical_and_arc(const Layout& l);

}  // namespace smog

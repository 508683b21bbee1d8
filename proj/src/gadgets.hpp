#pragma once

#include "smog/sat_reduction.hpp"

namespace smog::detail {

// Edges described by shape atom and symbolic extent; coordinates come later from place().
struct Sketch {
  Model model = Model::Smooth;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<ShapeAtom> atoms;
  std::vector<EdgeLength> lengths;

  int vertex() { return n++; }
  void seg(int u, int v, Dir d, LinearTerms len);
  void arc(int u, int v, Dir start, int quarters, Turn turn, LinearTerms len);
};

struct Ports {
  int in, out;
  std::vector<int> vertices;
};

// Variable ids used by the parity template.
struct ParityVars {
  int unit, pos, neg;
};

Ports emit_parity(Sketch& s, const ParityVars& v);

Representation representation_from(const Sketch& s);
std::vector<Point> place_sketch(const Sketch& s, const std::vector<Rational>& values, int root);
Drawing draw_sketch(const Sketch& s, const std::vector<Point>& coords, const std::vector<Rational>& values);

}  // namespace smog::detail

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smog/geometry.hpp"
#include "smog/graph.hpp"

namespace smog {

enum class Model { Smooth, Octilinear };
const char* model_name(Model m);
Model parse_model(const std::string& s);

class MalformedDrawing : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge i runs from edges[i].first to edges[i].second along geometry[i].
struct Drawing {
  Model model = Model::Smooth;
  std::vector<Point> coords;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<Primitive>> geometry;

  int find_edge(int u, int v) const;  // -1 if absent
  // Geometry of edge {u, v} oriented from u.
  std::vector<Primitive> path(int u, int v) const;
};

// Drop zero-extent primitives.
std::vector<Primitive> normalized(const std::vector<Primitive>& prims);

struct ShapeAtom {
  bool arc = false;
  Dir dir = Dir::E;  // direction of travel at the start
  int quarters = 0;  // arcs only
  Turn turn = Turn::CCW;
  bool operator==(const ShapeAtom& o) const {
    return arc == o.arc && dir == o.dir && (!arc || (quarters == o.quarters && turn == o.turn));
  }
};
std::string to_string(const ShapeAtom& a);
ShapeAtom atom_of(const Primitive& p);

struct Representation {
  Model model = Model::Smooth;
  std::vector<std::pair<int, int>> edges;  // same convention as Drawing
  std::vector<std::vector<ShapeAtom>> shapes;
  // ports[i] = {port at edges[i].first, port at edges[i].second}
  std::vector<std::pair<Dir, Dir>> ports;
};

Representation representation_of(const Drawing& d);

struct PreserveResult {
  bool ok = true;
  std::string mismatch;
};
PreserveResult preserves(const Drawing& d, const Representation& r);

struct ValidationOptions {
  // Several edges may share a side of a vertex if they use distinct fine ports.
  bool kandinsky = false;
  // If nonzero, every bend of an octilinear drawing must measure exactly this many degrees.
  int bend_angle = 0;
};

struct ValidationReport {
  std::vector<std::pair<int, int>> crossings;    // edge index pairs
  std::vector<std::pair<int, int>> vertex_hits;  // (edge, vertex)
  std::vector<int> self_intersecting;            // edges
  std::vector<int> port_clashes;                 // vertices
  std::vector<int> model_violations;             // edges
  std::vector<int> non_monotone;                 // edges
  std::vector<int> bad_bends;                    // edges
  std::vector<int> bend_angles;                  // degrees, every bend of every edge
  std::map<int, long> complexity;                // complexity -> edge count
  int max_complexity = 0;
  std::vector<std::string> notes;

  bool planar() const { return crossings.empty() && vertex_hits.empty() && self_intersecting.empty(); }
  bool ports_ok() const { return port_clashes.empty(); }
  bool model_ok() const { return model_violations.empty(); }
  bool monotone() const { return non_monotone.empty(); }
  bool bends_ok() const { return bad_bends.empty(); }
  bool ok() const { return planar() && ports_ok() && model_ok() && monotone() && bends_ok(); }
};

// Throws MalformedDrawing if the drawing does not match the graph or its geometry is disconnected.
ValidationReport validate(const PlanarGraph& g, const Drawing& d, const ValidationOptions& opt = {});
std::map<int, long> complexity_stats(const Drawing& d);

std::string summary(const ValidationReport& r);

struct BoundingBox {
  Rational min_x, min_y, max_x, max_y;
  Rational width() const { return max_x - min_x; }
  Rational height() const { return max_y - min_y; }
};
BoundingBox bounding_box(const Drawing& d);

void write_drawing(std::ostream& out, const Drawing& d);
Drawing read_drawing(std::istream& in);

// One line per edge: "r u v port_u port_v atom...".
void write_representation(std::ostream& out, const Representation& r);

}  // namespace smog

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "smog/families.hpp"
#include "smog/layout.hpp"

using namespace smog;

namespace {

Point P(Rational x, Rational y) { return {x, y}; }

// Path a-b-c-d drawn with straight segments.
PlanarGraph path4() {
  PlanarGraph g;
  g.n = 4;
  g.adj = {{1}, {0, 2}, {1, 3}, {2}};
  g.outer = {0, 1, 2, 3, 2, 1};
  return g;
}

Drawing straight(const PlanarGraph& g, std::vector<Point> coords, Model m = Model::Smooth) {
  Drawing d;
  d.model = m;
  d.coords = std::move(coords);
  for (auto [u, v] : g.edges()) {
    d.edges.push_back({u, v});
    d.geometry.push_back({Segment{d.coords[u], d.coords[v]}});
  }
  return d;
}

}  // namespace

TEST(Validate, CrossingPairIsListed) {
  PlanarGraph g = path4();
  // Edge 0-1 horizontal, edge 2-3 vertical through its middle.
  Drawing d = straight(g, {P(0, 0), P(2, 0), P(1, 2), P(1, -1)});
  d.geometry[1] = {Segment{P(2, 0), P(2, 2)}, Segment{P(2, 2), P(1, 2)}};
  ValidationReport r = validate(g, d);
  ASSERT_EQ(r.crossings.size(), 1u);
  auto [a, b] = r.crossings[0];
  std::set<std::pair<int, int>> pair{d.edges[a], d.edges[b]};
  EXPECT_TRUE(pair.count({0, 1}));
  EXPECT_TRUE(pair.count({2, 3}));
  EXPECT_FALSE(r.planar());
}

TEST(Validate, PortClash) {
  PlanarGraph g;
  g.n = 3;
  g.adj = {{1, 2}, {0}, {0}};
  g.outer = {0, 1, 0, 2};
  Drawing d;
  d.coords = {P(0, 0), P(3, 0), P(2, 1)};
  d.edges = {{0, 1}, {0, 2}};
  d.geometry = {{Segment{P(0, 0), P(3, 0)}},
                {Segment{P(0, 0), P(1, 0)}, Arc{P(1, 1), 1, P(1, 0), P(2, 1), Turn::CCW}}};
  ValidationReport r = validate(g, d);
  EXPECT_EQ(r.port_clashes, std::vector<int>{0});
  EXPECT_FALSE(r.ports_ok());
  // The second edge also overlaps the first along the shared east ray.
  EXPECT_FALSE(r.planar());
}

TEST(Validate, VertexHit) {
  PlanarGraph g = path4();
  Drawing d = straight(g, {P(0, 0), P(4, 0), P(2, 0), P(2, 3)});
  d.geometry[0] = {Segment{P(0, 0), P(4, 0)}};
  d.geometry[1] = {Segment{P(4, 0), P(4, 1)}, Segment{P(4, 1), P(2, 1)}, Segment{P(2, 1), P(2, 0)}};
  ValidationReport r = validate(g, d);
  EXPECT_FALSE(r.vertex_hits.empty());
}

TEST(Validate, MalformedInputs) {
  PlanarGraph g = path4();
  Drawing d = straight(g, {P(0, 0), P(1, 0), P(2, 0), P(3, 0)});
  Drawing gap = d;
  gap.geometry[1] = {Segment{P(1, 0), P(3, 0)}};
  EXPECT_THROW(validate(g, gap), MalformedDrawing);
  Drawing missing = d;
  missing.edges.pop_back();
  missing.geometry.pop_back();
  EXPECT_THROW(validate(g, missing), MalformedDrawing);
  Drawing bad_arc = d;
  bad_arc.geometry[0] = {Arc{P(0, 1), 2, P(0, 0), P(1, 0), Turn::CCW}};
  EXPECT_THROW(validate(g, bad_arc), MalformedDrawing);
}

TEST(Validate, ModelAndMonotone) {
  PlanarGraph g = path4();
  Drawing d = straight(g, {P(0, 0), P(1, 1), P(2, 2), P(3, 3)});
  ValidationReport smooth = validate(g, d);
  EXPECT_FALSE(smooth.model_ok());
  d.model = Model::Octilinear;
  ValidationReport oct = validate(g, d);
  EXPECT_TRUE(oct.ok());

  // A half arc is not xy-monotone.
  Drawing h = straight(g, {P(0, 0), P(2, 0), P(4, 0), P(6, 0)});
  h.geometry[0] = {Arc{P(1, 0), 1, P(0, 0), P(2, 0), Turn::CW}};
  ValidationReport r = validate(g, h);
  EXPECT_TRUE(r.planar());
  EXPECT_FALSE(r.monotone());
}

TEST(Validate, OctilinearBendAngles) {
  PlanarGraph g = path4();
  Drawing d = straight(g, {P(0, 0), P(2, 1), P(3, 1), P(4, 1)}, Model::Octilinear);
  d.geometry[0] = {Segment{P(0, 0), P(1, 1)}, Segment{P(1, 1), P(2, 1)}};
  ValidationReport r = validate(g, d);
  ASSERT_EQ(r.bend_angles.size(), 1u);
  EXPECT_EQ(r.bend_angles[0], 135);
  ValidationOptions o;
  o.bend_angle = 90;
  EXPECT_FALSE(validate(g, d, o).bends_ok());
  d.geometry[0] = {Segment{P(0, 0), P(1, 1)}, Segment{P(1, 1), P(2, 0)}, Segment{P(2, 0), P(2, 1)}};
  ValidationReport sharp = validate(g, d);
  EXPECT_EQ(std::count(sharp.bend_angles.begin(), sharp.bend_angles.end(), 90), 1);
}

TEST(Validate, ComplexityStatsOfStraightK4) {
  PlanarGraph g = gen_k4();
  Drawing d = straight(g, {P(0, 0), P(4, 0), P(2, 4), P(2, 1)}, Model::Octilinear);
  auto stats = complexity_stats(d);
  EXPECT_EQ(stats.size(), 1u);
  EXPECT_EQ(stats[1], 6);
}

TEST(Validate, ZeroExtentPrimitivesAreDropped) {
  PlanarGraph g = path4();
  Drawing d = straight(g, {P(0, 0), P(1, 0), P(2, 0), P(3, 0)});
  d.geometry[0] = {Segment{P(0, 0), P(0, 0)}, Segment{P(0, 0), P(1, 0)}};
  EXPECT_EQ(complexity_stats(d)[1], 3);
  EXPECT_TRUE(validate(g, d).ok());
}

TEST(Validate, PreservesDetectsShapeChange) {
  PlanarGraph g = gen_triangle();
  Layout l = layout_smooth(g, canonical_order(g));
  Representation r = representation_of(l.drawing);
  EXPECT_TRUE(preserves(l.drawing, r).ok);
  Representation altered = r;
  for (size_t i = 0; i < altered.shapes.size(); ++i)
    if (altered.shapes[i][0].arc) {
      altered.shapes[i] = {ShapeAtom{false, Dir::E}};
      PreserveResult p = preserves(l.drawing, altered);
      EXPECT_FALSE(p.ok);
      std::string name = std::to_string(altered.edges[i].first) + "-" + std::to_string(altered.edges[i].second);
      EXPECT_NE(p.mismatch.find(name), std::string::npos) << p.mismatch;
      break;
    }
  EXPECT_TRUE(preserves(Drawing{}, Representation{}).ok);
}

TEST(Validate, EdgeOrderDoesNotChangeVerdict) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    PlanarGraph g = random_maximal_planar(5 + static_cast<int>(rng() % 30), rng);
    Drawing d = layout_smooth(g, canonical_order(g)).drawing;
    ValidationOptions o;
    o.kandinsky = true;
    bool before = validate(g, d, o).ok();
    std::vector<size_t> idx(d.edges.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    Drawing e = d;
    for (size_t i = 0; i < idx.size(); ++i) {
      e.edges[i] = d.edges[idx[i]];
      e.geometry[i] = d.geometry[idx[i]];
    }
    EXPECT_EQ(validate(g, e, o).ok(), before);
    EXPECT_TRUE(before);
    auto stats = complexity_stats(d);
    long total = 0;
    for (auto [c, k] : stats) total += k;
    EXPECT_EQ(total, g.edge_count());
  }
}

TEST(Validate, DrawingFileRoundTrip) {
  PlanarGraph g = gen_octahedron();
  Drawing d = layout_refined(g).drawing;
  std::stringstream s;
  write_drawing(s, d);
  Drawing e = read_drawing(s);
  std::stringstream t;
  write_drawing(t, e);
  EXPECT_EQ(s.str(), t.str());
  ValidationOptions o;
  o.kandinsky = true;
  EXPECT_TRUE(validate(g, e, o).ok());
}

TEST(Validate, DrawingParserErrors) {
  std::istringstream bad("model smooth\nvertices 1\nv 0 0 x\nedges 0\n");
  EXPECT_THROW(read_drawing(bad), MalformedDrawing);
  std::istringstream truncated("model smooth\nvertices 2\nv 0 0 0\n");
  EXPECT_THROW(read_drawing(truncated), MalformedDrawing);
}

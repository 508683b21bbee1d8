#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "smog/families.hpp"
#include "smog/layout.hpp"

using namespace smog;

namespace {

ValidationOptions kandinsky() {
  ValidationOptions o;
  o.kandinsky = true;
  return o;
}

// Textbook shift method with explicit shift sets, quadratic time.
std::vector<std::pair<long, long>> reference_shift(const PlanarGraph& g, const CanonicalOrder& o) {
  const int n = g.n;
  std::vector<long> x(n, 0), y(n, 0);
  std::vector<std::vector<int>> under(n);
  const int v1 = o.v(1), v2 = o.v(2), v3 = o.v(3);
  x[v2] = 2;
  x[v3] = 1;
  y[v3] = 1;
  for (int v : {v1, v2, v3}) under[v] = {v};
  std::vector<int> contour{v1, v3, v2};
  for (int k = 4; k <= n; ++k) {
    int v = o.v(k);
    const auto& low = o.lower[k - 1];
    size_t l = std::find(contour.begin(), contour.end(), low.front()) - contour.begin();
    size_t r = std::find(contour.begin(), contour.end(), low.back()) - contour.begin();
    for (size_t i = l + 1; i < contour.size(); ++i)
      for (int u : under[contour[i]]) x[u] += i < r ? 1 : 2;
    int wl = contour[l], wr = contour[r];
    x[v] = (x[wl] + x[wr] + y[wr] - y[wl]) / 2;
    y[v] = (x[wr] - x[wl] + y[wl] + y[wr]) / 2;
    under[v] = {v};
    for (size_t i = l + 1; i < r; ++i) under[v].insert(under[v].end(), under[contour[i]].begin(), under[contour[i]].end());
    std::vector<int> next(contour.begin(), contour.begin() + l + 1);
    next.push_back(v);
    next.insert(next.end(), contour.begin() + r, contour.end());
    contour = next;
  }
  std::vector<std::pair<long, long>> out(n);
  for (int v = 0; v < n; ++v) out[v] = {x[v], y[v]};
  return out;
}

std::vector<PlanarGraph> sample_graphs(int count, int max_n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<PlanarGraph> out{gen_k4(), gen_octahedron()};
  for (int i = 0; i < count; ++i) out.push_back(random_maximal_planar(4 + static_cast<int>(rng() % (max_n - 3)), rng));
  return out;
}

}  // namespace

TEST(Layout, TriangleShape) {
  PlanarGraph g = gen_triangle();
  Layout l = layout_smooth(g, canonical_order(g));
  auto stats = complexity_stats(l.drawing);
  EXPECT_EQ(stats[1], 3);
  int horizontal = 0, arcs = 0;
  for (const auto& geo : l.drawing.geometry) {
    ASSERT_EQ(geo.size(), 1u);
    if (auto a = std::get_if<Arc>(&geo[0])) {
      EXPECT_EQ(arc_quarters(*a), 1);
      ++arcs;
    } else if (std::get<Segment>(geo[0]).kind() == SegmentKind::Horizontal) {
      ++horizontal;
    }
  }
  EXPECT_EQ(horizontal, 1);
  EXPECT_EQ(arcs, 2);
  EXPECT_TRUE(validate(g, l.drawing).ok());
}

TEST(Layout, SmallGraphsValid) {
  for (PlanarGraph g : {gen_k4(), gen_octahedron()}) {
    Layout l = layout_smooth(g, canonical_order(g));
    ValidationReport r = validate(g, l.drawing, kandinsky());
    EXPECT_TRUE(r.ok()) << summary(r);
    EXPECT_LE(r.max_complexity, 2);
  }
}

TEST(Layout, MatchesReferenceShift) {
  for (const PlanarGraph& g : sample_graphs(40, 80, 31)) {
    CanonicalOrder o = canonical_order(g);
    Layout l = layout_smooth(g, o);
    auto ref = reference_shift(g, o);
    for (int v = 0; v < g.n; ++v) {
      ASSERT_EQ(l.drawing.coords[v].x, ref[v].first) << "n=" << g.n << " v=" << v;
      ASSERT_EQ(l.drawing.coords[v].y, ref[v].second) << "n=" << g.n << " v=" << v;
    }
  }
}

TEST(Layout, GridBoundsAndValidity) {
  for (const PlanarGraph& g : sample_graphs(30, 120, 5)) {
    Layout l = layout_smooth(g, canonical_order(g));
    BoundingBox bb = bounding_box(l.drawing);
    EXPECT_LE(bb.width(), 2 * g.n - 4);
    EXPECT_LE(bb.height(), g.n - 2);
    for (const Point& p : l.drawing.coords) {
      EXPECT_EQ(p.x.get_den(), 1);
      EXPECT_EQ(p.y.get_den(), 1);
    }
    ValidationReport r = validate(g, l.drawing, kandinsky());
    EXPECT_TRUE(r.ok()) << "n=" << g.n << "\n" << summary(r);
    EXPECT_LE(r.max_complexity, 2);
    // Every edge goes up from its earlier endpoint.
    for (auto [a, b] : l.drawing.edges) EXPECT_LT(l.order.rank[a], l.order.rank[b]);
  }
}

TEST(Layout, ContourConditionAfterEveryStep) {
  for (const PlanarGraph& g : sample_graphs(20, 60, 77)) {
    CanonicalOrder o = canonical_order(g);
    int steps = 0;
    layout_smooth(g, o, [&](int k, const std::vector<Point>& coords) {
      ++steps;
      EXPECT_EQ(contour_condition_violation(g, o, k, coords), "") << "n=" << g.n << " k=" << k;
    });
    EXPECT_EQ(steps, g.n - 2);
  }
}

TEST(Layout, ContourConditionDetectsBrokenStep) {
  PlanarGraph g = gen_octahedron();
  CanonicalOrder o = canonical_order(g);
  Layout l = layout_smooth(g, o);
  std::vector<Point> coords = l.drawing.coords;
  coords[o.v(2)].y += 1;
  EXPECT_NE(contour_condition_violation(g, o, g.n, coords), "");
}

TEST(Layout, OctilinearBends) {
  for (const PlanarGraph& g : sample_graphs(20, 80, 12)) {
    Layout l = to_octilinear(layout_smooth(g, canonical_order(g)));
    ValidationOptions o = kandinsky();
    o.bend_angle = 135;
    ValidationReport r = validate(g, l.drawing, o);
    EXPECT_TRUE(r.ok()) << summary(r);
    for (int b : r.bend_angles) EXPECT_EQ(b, 135);
  }
  PlanarGraph t = gen_triangle();
  Drawing d = to_octilinear(layout_smooth(t, canonical_order(t))).drawing;
  std::set<int> slopes;
  for (const auto& geo : d.geometry)
    for (const auto& p : geo) {
      const Segment& s = std::get<Segment>(p);
      Rational dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
      ASSERT_NE(dx, 0);
      slopes.insert(static_cast<int>(Rational(dy / dx).get_d()));
    }
  EXPECT_EQ(slopes, (std::set<int>{-1, 0, 1}));
}

TEST(Layout, OctilinearRejectsLongArcs) {
  Drawing d;
  d.coords = {{0, 0}, {2, 0}};
  d.edges = {{0, 1}};
  d.geometry = {{Arc{{1, 0}, 1, {0, 0}, {2, 0}, Turn::CW}}};
  EXPECT_THROW(to_octilinear(d), LayoutError);
}

TEST(Stretch, HorizontalRemovesVerticalArcEdges) {
  for (const PlanarGraph& g : sample_graphs(25, 80, 99)) {
    Layout l = layout_smooth(g, canonical_order(g));
    StretchTrace tr;
    int checked = 0;
    tr.on_cut = [&](const Layout& cur, const CutRecord& c) {
      EXPECT_GT(c.delta, 0);
      ValidationReport r = validate(g, cur.drawing, kandinsky());
      EXPECT_TRUE(r.planar()) << "n=" << g.n << " after cut " << checked;
      ++checked;
    };
    Layout h = stretch_horizontal(l, &tr);
    EXPECT_TRUE(red_edges_with_vertical_and_arc(h).empty());
    EXPECT_EQ(checked, static_cast<int>(tr.cuts.size()));
    EXPECT_LE(static_cast<int>(tr.cuts.size()), g.n);
    // Heights never change horizontally.
    for (int v = 0; v < g.n; ++v) EXPECT_EQ(h.drawing.coords[v].y, l.drawing.coords[v].y);
  }
}

TEST(Stretch, VerticalFollowsRecurrence) {
  for (const PlanarGraph& g : sample_graphs(25, 80, 4)) {
    Layout h = stretch_horizontal(layout_smooth(g, canonical_order(g)));
    Layout v = stretch_vertical(h);
    const CanonicalOrder& o = v.order;
    EXPECT_EQ(v.drawing.coords[o.v(1)].y, 0);
    EXPECT_EQ(v.drawing.coords[o.v(2)].y, 0);
    for (int k = 3; k <= g.n; ++k) {
      int vk = o.v(k);
      EXPECT_EQ(v.drawing.coords[vk].x, h.drawing.coords[vk].x);
      Rational want = -1;
      for (int w : o.lower[k - 1]) {
        Rational dx = abs(v.drawing.coords[vk].x - v.drawing.coords[w].x);
        want = std::max(want, Rational(v.drawing.coords[w].y + std::max(dx, Rational(1))));
      }
      EXPECT_EQ(v.drawing.coords[vk].y, want);
    }
  }
}

TEST(Stretch, VerticalNeedsHorizontalFirst) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    PlanarGraph g = random_maximal_planar(30, rng);
    Layout l = layout_smooth(g, canonical_order(g));
    if (red_edges_with_vertical_and_arc(l).empty()) continue;
    EXPECT_THROW(stretch_vertical(l), LayoutError);
    return;
  }
  GTEST_SKIP() << "no sample needed a horizontal stretch";
}

TEST(Stretch, RefinedCounts) {
  for (const PlanarGraph& g : sample_graphs(30, 120, 21)) {
    Layout l = layout_refined(g);
    ValidationReport r = validate(g, l.drawing, kandinsky());
    EXPECT_TRUE(r.ok()) << "n=" << g.n << "\n" << summary(r);
    EXPECT_GE(r.complexity[1], g.n - 1) << "n=" << g.n;
    EXPECT_LE(r.complexity[2], 2 * g.n - 5) << "n=" << g.n;
    EXPECT_LE(r.max_complexity, 2);
  }
}

TEST(Stretch, OctahedronTrace) {
  PlanarGraph g = gen_octahedron();
  StretchTrace tr;
  tr.record_drawings = true;
  Layout l = layout_refined(g, &tr);
  EXPECT_EQ(tr.cuts.size(), 2u);
  EXPECT_EQ(tr.after_cut.size(), tr.cuts.size());
  for (const Drawing& d : tr.after_cut) EXPECT_TRUE(validate(g, d, kandinsky()).planar());
  EXPECT_TRUE(validate(g, l.drawing, kandinsky()).ok());
}

TEST(Stretch, CutEpsilonOverride) {
  PlanarGraph g = gen_octahedron();
  ASSERT_EQ(setenv("SMOG_CUT_EPSILON", "1/4", 1), 0);
  EXPECT_EQ(cut_epsilon_fraction(), Rational(1, 4));
  StretchTrace tr;
  Layout l = layout_refined(g, &tr);
  EXPECT_TRUE(validate(g, l.drawing, kandinsky()).ok());
  setenv("SMOG_CUT_EPSILON", "2", 1);
  EXPECT_THROW(cut_epsilon_fraction(), LayoutError);
  unsetenv("SMOG_CUT_EPSILON");
  EXPECT_EQ(cut_epsilon_fraction(), Rational(1, 2));
}

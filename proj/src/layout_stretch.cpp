#include <cstdlib>
#include <optional>

#include "smog/layout.hpp"

namespace smog {

Rational cut_epsilon_fraction() {
  if (const char* env = std::getenv("SMOG_CUT_EPSILON")) {
    try {
      Rational f = parse_rational(env);
      if (f > 0 && f < 1) return f;
    } catch (const std::invalid_argument&) {
    }
    throw LayoutError(std::string("SMOG_CUT_EPSILON must be a rational in (0, 1), got ") + env);
  }
  return Rational(1, 2);
}

std::vector<int> red_edges_with_vertical_and_arc(const Layout& l) {
  std::vector<int> out;
  const Drawing& d = l.drawing;
  for (size_t i = 0; i < d.edges.size(); ++i) {
    if (l.colors[i] != EdgeColor::Red) continue;
    const Point& a = d.coords[d.edges[i].first];
    const Point& b = d.coords[d.edges[i].second];
    Rational dy = b.y - a.y, dx = abs(b.x - a.x);
    if (dy > dx && dx > 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

// Smallest positive distance from x to a feature x-coordinate on the given side.
std::optional<Rational> min_gap(const Drawing& d, const Rational& x, bool to_left) {
  std::optional<Rational> best;
  auto consider = [&](const Rational& t) {
    Rational gap = to_left ? Rational(x - t) : Rational(t - x);
    if (gap > 0 && (!best || gap < *best)) best = gap;
  };
  for (const auto& p : d.coords) consider(p.x);
  for (const auto& geo : d.geometry)
    for (const auto& p : geo) {
      consider(start_of(p).x);
      consider(end_of(p).x);
    }
  return best;
}

void check_cut(const Layout& l, const Rational& cut_x, const Rational& delta) {
  const Drawing& d = l.drawing;
  for (const auto& p : d.coords)
    if (p.x == cut_x) throw LayoutError("cut passes through a vertex");
  for (size_t i = 0; i < d.edges.size(); ++i) {
    const Point& a = d.coords[d.edges[i].first];
    const Point& b = d.coords[d.edges[i].second];
    Rational vertical = b.y - a.y - abs(b.x - a.x);
    for (const auto& p : d.geometry[i]) {
      Rational x0 = start_of(p).x, x1 = end_of(p).x;
      if (x0 > x1) std::swap(x0, x1);
      if (x0 == x1 && x0 == cut_x) throw LayoutError("cut runs along a vertical segment");
      if (!(x0 < cut_x && cut_x < x1)) continue;
      bool horizontal = !is_arc(p) && std::get<Segment>(p).kind() == SegmentKind::Horizontal;
      if (!horizontal && vertical > delta)
        throw LayoutError("cut crosses a bend of edge " + std::to_string(d.edges[i].first) + "-" +
                          std::to_string(d.edges[i].second) + " whose vertical part exceeds the shift");
    }
  }
}

}  // namespace

Layout stretch_horizontal(const Layout& in, StretchTrace* trace) {
  Layout l = in;
  Drawing& d = l.drawing;
  const Rational frac = cut_epsilon_fraction();
  while (true) {
    int best = -1;
    Rational best_delta;
    for (int i : red_edges_with_vertical_and_arc(l)) {
      const Point& a = d.coords[d.edges[i].first];
      const Point& b = d.coords[d.edges[i].second];
      Rational delta = b.y - a.y - abs(b.x - a.x);
      if (best < 0 || delta > best_delta ||
          (delta == best_delta && d.edges[i].second < d.edges[best].second)) {
        best = i;
        best_delta = delta;
      }
    }
    if (best < 0) break;
    int v = d.edges[best].first, u = d.edges[best].second;
    Rational xu = d.coords[u].x;
    bool mirrored = xu < d.coords[v].x;
    auto gap = min_gap(d, xu, !mirrored);
    Rational eps = gap ? Rational(*gap * frac) : Rational(frac);
    Rational cut_x = mirrored ? Rational(xu + eps) : Rational(xu - eps);
    check_cut(l, cut_x, best_delta);
    for (auto& p : d.coords)
      if (mirrored ? p.x > xu : p.x >= xu) p.x += best_delta;
    reshape(l);
    CutRecord rec{u, v, best_delta, cut_x, eps, mirrored};
    if (trace) {
      trace->cuts.push_back(rec);
      if (trace->record_drawings) trace->after_cut.push_back(d);
      if (trace->on_cut) trace->on_cut(l, rec);
    }
  }
  return l;
}

Layout stretch_vertical(const Layout& in) {
  Layout l = in;
  Drawing& d = l.drawing;
  for (auto [a, b] : d.edges) {
    Rational dy = d.coords[b].y - d.coords[a].y, dx = abs(d.coords[b].x - d.coords[a].x);
    if (dx > 0 && dy > dx)
      throw LayoutError("stretch-order: edge " + std::to_string(a) + "-" + std::to_string(b) +
                        " still has a vertical segment and an arc; run the horizontal stretch first");
  }
  const CanonicalOrder& order = l.order;
  const int n = static_cast<int>(order.pi.size());
  d.coords[order.v(1)].y = 0;
  d.coords[order.v(2)].y = 0;
  for (int k = 3; k <= n; ++k) {
    int vk = order.v(k);
    std::optional<Rational> y;
    for (int w : order.lower[k - 1]) {
      Rational dx = abs(d.coords[vk].x - d.coords[w].x);
      Rational cand = d.coords[w].y + (dx > 1 ? dx : Rational(1));
      if (!y || cand > *y) y = cand;
    }
    d.coords[vk].y = *y;
  }
  reshape(l);
  return l;
}

Layout layout_refined(const PlanarGraph& g, StretchTrace* trace) {
  CanonicalOrder order = canonical_order(g);
  Layout l = layout_smooth(g, order);
  l = stretch_horizontal(l, trace);
  return stretch_vertical(l);
}

}  // namespace smog

#include <algorithm>
#include <map>

#include "smog/layout.hpp"

namespace smog {

const char* color_name(EdgeColor c) {
  switch (c) {
    case EdgeColor::Base: return "base";
    case EdgeColor::Blue: return "blue";
    case EdgeColor::Green: return "green";
    default: return "red";
  }
}

std::vector<Primitive> edge_shape(const Point& lower, const Point& upper, Model model) {
  Rational dy = upper.y - lower.y, dx = upper.x - lower.x;
  if (dy < 0) throw LayoutError("edge runs downwards from " + to_string(lower) + " to " + to_string(upper));
  std::vector<Primitive> out;
  if (dy == 0) {
    if (dx != 0) out.push_back(Segment{lower, upper});
    return out;
  }
  Rational adx = abs(dx);
  auto bend = [&](const Point& a, const Point& b) -> Primitive {
    if (model == Model::Octilinear) return Segment{a, b};
    return quarter_arc(a, b, Dir::N);
  };
  if (dy >= adx) {
    Point p{lower.x, upper.y - adx};
    if (!(p == lower)) out.push_back(Segment{lower, p});
    if (adx != 0) out.push_back(bend(p, upper));
  } else {
    Point p{lower.x + (dx > 0 ? dy : Rational(-dy)), upper.y};
    out.push_back(bend(lower, p));
    out.push_back(Segment{p, upper});
  }
  return out;
}

void reshape(Layout& l) {
  Drawing& d = l.drawing;
  for (size_t i = 0; i < d.edges.size(); ++i)
    d.geometry[i] = edge_shape(d.coords[d.edges[i].first], d.coords[d.edges[i].second], d.model);
}

namespace {

std::vector<long long> absolute_x(int root, const std::vector<long long>& off, const std::vector<int>& left,
                                  const std::vector<int>& right) {
  std::vector<long long> x(off.size(), 0);
  std::vector<std::pair<int, long long>> stack{{root, off[root]}};
  while (!stack.empty()) {
    auto [v, xv] = stack.back();
    stack.pop_back();
    x[v] = xv;
    if (left[v] >= 0) stack.push_back({left[v], xv + off[left[v]]});
    if (right[v] >= 0) stack.push_back({right[v], xv + off[right[v]]});
  }
  return x;
}

}  // namespace

Layout layout_smooth(const PlanarGraph& g, const CanonicalOrder& order, const StepHook& hook) {
  const int n = g.n;
  if (n < 3) throw LayoutError("layout needs at least 3 vertices");
  if (static_cast<int>(order.pi.size()) != n || static_cast<int>(order.lower.size()) != n)
    throw LayoutError("canonical order does not match graph");
  std::vector<long long> off(n, 0), y(n, 0);
  std::vector<int> left(n, -1), right(n, -1);
  std::map<std::pair<int, int>, EdgeColor> color;
  auto set_color = [&](int a, int b, EdgeColor c) { color[{std::min(a, b), std::max(a, b)}] = c; };
  const int v1 = order.v(1), v2 = order.v(2), v3 = order.v(3);
  if (!g.has_edge(v1, v2) || !g.has_edge(v1, v3) || !g.has_edge(v2, v3)) throw LayoutError("invalid order: v1 v2 v3 not a triangle");
  off[v3] = 1;
  off[v2] = 1;
  y[v3] = 1;
  right[v1] = v3;
  right[v3] = v2;
  set_color(v1, v2, EdgeColor::Base);
  set_color(v1, v3, EdgeColor::Blue);
  set_color(v3, v2, EdgeColor::Green);

  auto emit = [&](int k) {
    if (!hook) return;
    auto x = absolute_x(v1, off, left, right);
    std::vector<Point> coords(n);
    for (int j = 1; j <= k; ++j) coords[order.v(j)] = {Rational(static_cast<long>(x[order.v(j)])), Rational(static_cast<long>(y[order.v(j)]))};
    hook(k, coords);
  };
  emit(3);

  for (int k = 4; k <= n; ++k) {
    const int vk = order.v(k);
    const auto& low = order.lower[k - 1];
    if (low.size() < 2) throw LayoutError("invalid order: v_" + std::to_string(k) + " has fewer than two lower neighbours");
    const int wl = low.front(), wr = low.back();
    for (size_t i = 0; i + 1 < low.size(); ++i) {
      if (right[low[i]] != low[i + 1] || !g.has_edge(vk, low[i]))
        throw LayoutError("invalid order: neighbours of v_" + std::to_string(k) + " not consecutive on the contour");
    }
    if (!g.has_edge(vk, wr)) throw LayoutError("invalid order: missing edge to contour neighbour");
    const int wl1 = right[wl];
    off[wl1] += 1;
    off[wr] += 1;
    long long delta = 0;
    for (size_t i = 1; i < low.size(); ++i) delta += off[low[i]];
    long long num_x = delta + y[wr] - y[wl];
    if (num_x % 2 != 0) throw LayoutError("contour parity broken at v_" + std::to_string(k));
    long long xk = num_x / 2;
    off[vk] = xk;
    y[vk] = (delta + y[wr] + y[wl]) / 2;
    off[wr] = delta - xk;
    if (wl1 != wr) {
      off[wl1] -= xk;
      left[vk] = wl1;
      right[low[low.size() - 2]] = -1;
    }
    right[wl] = vk;
    right[vk] = wr;
    set_color(wl, vk, EdgeColor::Blue);
    set_color(vk, wr, EdgeColor::Green);
    for (size_t i = 1; i + 1 < low.size(); ++i) set_color(low[i], vk, EdgeColor::Red);
    emit(k);
  }

  auto x = absolute_x(v1, off, left, right);
  Layout out;
  out.order = order;
  Drawing& d = out.drawing;
  d.model = Model::Smooth;
  d.coords.resize(n);
  for (int v = 0; v < n; ++v) d.coords[v] = {Rational(static_cast<long>(x[v])), Rational(static_cast<long>(y[v]))};
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : g.edges()) {
    if (order.rank[a] > order.rank[b]) std::swap(a, b);
    es.push_back({a, b});
  }
  std::sort(es.begin(), es.end(), [&](auto& p, auto& q) {
    return std::make_pair(order.rank[p.second], order.rank[p.first]) < std::make_pair(order.rank[q.second], order.rank[q.first]);
  });
  d.edges = es;
  d.geometry.resize(es.size());
  for (auto [a, b] : es) {
    auto it = color.find({std::min(a, b), std::max(a, b)});
    if (it == color.end()) throw LayoutError("edge never coloured; order does not cover the graph");
    out.colors.push_back(it->second);
  }
  reshape(out);
  return out;
}

std::string contour_condition_violation(const PlanarGraph& g, const CanonicalOrder& order, int k,
                                        const std::vector<Point>& coords) {
  auto c = contour_at(g, order, k);
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    const Point& a = coords[c[i]];
    const Point& b = coords[c[i + 1]];
    Rational dx = b.x - a.x, dy = b.y - a.y;
    if (dx <= 0) return "contour not left to right at " + std::to_string(c[i]);
    if (abs(dx) != abs(dy))
      return "contour edge " + std::to_string(c[i]) + "-" + std::to_string(c[i + 1]) + " is not on a slope +-1 line";
  }
  const Point& p1 = coords[order.v(1)];
  const Point& p2 = coords[order.v(2)];
  if (p1.y != p2.y) return "edge (v1, v2) is not horizontal";
  return "";
}

Drawing to_octilinear(const Drawing& d) {
  Drawing o = d;
  o.model = Model::Octilinear;
  for (auto& geo : o.geometry)
    for (auto& p : geo)
      if (auto a = std::get_if<Arc>(&p)) {
        if (a->radius != 0 && arc_quarters(*a) != 1) throw LayoutError("unsupported-shape: only quarter arcs convert");
        p = Segment{a->start, a->end};
      }
  return o;
}

Layout to_octilinear(const Layout& l) {
  Layout o = l;
  o.drawing = to_octilinear(l.drawing);
  return o;
}

}  // namespace smog

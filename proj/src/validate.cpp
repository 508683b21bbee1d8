#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "smog/drawing.hpp"

namespace smog {

namespace {

struct Box {
  double x0, y0, x1, y1;
  bool overlaps(const Box& o) const { return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1; }
  bool contains(double x, double y) const { return x0 <= x && x <= x1 && y0 <= y && y <= y1; }
};

Box merge(const Box& a, const Box& b) {
  return {std::min(a.x0, b.x0), std::min(a.y0, b.y0), std::max(a.x1, b.x1), std::max(a.y1, b.y1)};
}

// Floating-point copy of a primitive, used to rule out contacts with a safety margin before any
// exact computation.
struct Approx {
  bool arc = false;
  double ax, ay, bx, by, cx = 0, cy = 0, r = 0, scale;
  const Arc* exact = nullptr;
  const Segment* seg = nullptr;
  int sa = 0, ea = 0;  // axis indices of the arc endpoints
  int quarters = 0;
  unsigned mask = 0;
  double start_angle = 0, sweep = 0;  // sweep is signed, positive counter-clockwise
};

constexpr double kTwoPi = 6.283185307179586;
constexpr double kMargin = 1e-9;

Approx approx_of(const Primitive& p) {
  Approx a;
  Point s = start_of(p), e = end_of(p);
  a.ax = s.x.get_d(), a.ay = s.y.get_d(), a.bx = e.x.get_d(), a.by = e.y.get_d();
  a.seg = std::get_if<Segment>(&p);
  if (auto arc = std::get_if<Arc>(&p)) {
    a.arc = true;
    a.exact = arc;
    a.cx = arc->center.x.get_d(), a.cy = arc->center.y.get_d(), a.r = arc->radius.get_d();
    auto axis = [&](double x, double y) {
      double dx = x - a.cx, dy = y - a.cy;
      return std::abs(dx) > std::abs(dy) ? (dx > 0 ? 0 : 2) : (dy > 0 ? 1 : 3);
    };
    a.sa = axis(a.ax, a.ay);
    a.ea = axis(a.bx, a.by);
    bool ccw = arc->turn == Turn::CCW;
    a.quarters = ccw ? (a.ea - a.sa + 4) % 4 : (a.sa - a.ea + 4) % 4;
    for (int k = 0; k < a.quarters; ++k) a.mask |= 1u << (ccw ? (a.sa + k) % 4 : (a.sa + 7 - k) % 4);
    a.start_angle = a.sa * kTwoPi / 4;
    a.sweep = a.quarters * kTwoPi / 4 * (ccw ? 1 : -1);
  }
  a.scale = 1 + std::max({std::abs(a.ax), std::abs(a.ay), std::abs(a.bx), std::abs(a.by), std::abs(a.cx), std::abs(a.cy), a.r});
  return a;
}

// Whether (x, y), known to lie near the carrier line or circle of a, is clearly off the primitive.
bool clearly_off(const Approx& a, double x, double y) {
  if (!a.arc) {
    double dx = a.bx - a.ax, dy = a.by - a.ay;
    double t = ((x - a.ax) * dx + (y - a.ay) * dy) / (dx * dx + dy * dy);
    return t < -kMargin || t > 1 + kMargin;
  }
  double rel = std::atan2(y - a.cy, x - a.cx) - a.start_angle;
  if (a.sweep < 0) rel = -rel;
  rel = std::fmod(rel, kTwoPi);
  if (rel < 0) rel += kTwoPi;
  double w = std::abs(a.sweep);
  return rel > w + kMargin && rel < kTwoPi - kMargin;
}

Box box_of(const Approx& a) {
  double x0 = std::min(a.ax, a.bx), x1 = std::max(a.ax, a.bx), y0 = std::min(a.ay, a.by), y1 = std::max(a.ay, a.by);
  if (a.arc) {
    if (a.mask & 0b1001) x1 = a.cx + a.r;
    if (a.mask & 0b0011) y1 = a.cy + a.r;
    if (a.mask & 0b0110) x0 = a.cx - a.r;
    if (a.mask & 0b1100) y0 = a.cy - a.r;
  }
  double e = 1e-9 * a.scale;
  return {x0 - e, y0 - e, x1 + e, y1 + e};
}

// Direction in which a primitive leaves its start point.
Dir leaving(const Primitive& p, const Approx& a) {
  if (!a.arc) return start_tangent(p);
  return static_cast<Dir>((2 * a.sa + (a.sweep > 0 ? 2 : 6)) % 8);
}
Dir reversed_leaving(const Primitive& reversed_p, const Approx& original) {
  if (!original.arc) return start_tangent(reversed_p);
  return static_cast<Dir>((2 * original.ea + (original.sweep > 0 ? 6 : 2)) % 8);
}
Dir arriving(const Primitive& p, const Approx& a) {
  if (!a.arc) return end_tangent(p);
  return static_cast<Dir>((2 * a.ea + (a.sweep > 0 ? 2 : 6)) % 8);
}

// True when the two primitives provably have no common point other than p (if given).
bool clear_pair(const Approx& a, const Approx& b, const double* p) {
  const double sc = std::max(a.scale, b.scale);
  const double tol = 1e-9 * sc;
  std::vector<std::pair<double, double>> cand;
  if (!a.arc && !b.arc) {
    double dax = a.bx - a.ax, day = a.by - a.ay, dbx = b.bx - b.ax, dby = b.by - b.ay;
    double den = dax * dby - day * dbx;
    if (std::abs(den) <= tol * sc) {
      // Parallel: clear only if the carrier lines are apart, or the shared point separates them.
      double off = (b.ax - a.ax) * day - (b.ay - a.ay) * dax;
      if (std::abs(off) > tol * sc) return true;
      if (!p) return false;
      double qa = (a.ax - p[0]) * (a.ax - p[0]) + (a.ay - p[1]) * (a.ay - p[1]) > tol * tol ? 0 : 1;
      double qb = (b.ax - p[0]) * (b.ax - p[0]) + (b.ay - p[1]) * (b.ay - p[1]) > tol * tol ? 0 : 1;
      double ux = qa ? dax : -dax, uy = qa ? day : -day, vx = qb ? dbx : -dbx, vy = qb ? dby : -dby;
      return ux * vx + uy * vy < -tol * sc;
    }
    double t = ((b.ax - a.ax) * dby - (b.ay - a.ay) * dbx) / den;
    cand.push_back({a.ax + t * dax, a.ay + t * day});
  } else if (a.arc != b.arc) {
    const Approx& seg = a.arc ? b : a;
    const Approx& arc = a.arc ? a : b;
    double dx = seg.bx - seg.ax, dy = seg.by - seg.ay;
    double fx = seg.ax - arc.cx, fy = seg.ay - arc.cy;
    double A = dx * dx + dy * dy, B = 2 * (fx * dx + fy * dy), C = fx * fx + fy * fy - arc.r * arc.r;
    if (p) {
      // A segment leaving an arc endpoint perpendicular to the radius there is tangent to the circle.
      for (int k : {arc.sa, arc.ea}) {
        double px = arc.cx + arc.r * std::cos(k * kTwoPi / 4), py = arc.cy + arc.r * std::sin(k * kTwoPi / 4);
        if (std::hypot(px - p[0], py - p[1]) > tol) continue;
        if (k % 2 == 0 ? seg.seg->a.x == seg.seg->b.x : seg.seg->a.y == seg.seg->b.y) return true;
      }
    }
    const Segment& es = *seg.seg;
    const Arc& ec = *arc.exact;
    bool vertical = es.a.x == es.b.x, horizontal = es.a.y == es.b.y;
    if ((vertical && abs(es.a.x - ec.center.x) == ec.radius) || (horizontal && abs(es.a.y - ec.center.y) == ec.radius)) {
      // Tangent line: the only candidate is the touching point.
      double tx = vertical ? seg.ax : arc.cx, ty = vertical ? arc.cy : seg.ay;
      if (p && std::hypot(tx - p[0], ty - p[1]) <= 1e-7 * sc) return true;
      return clearly_off(seg, tx, ty) || clearly_off(arc, tx, ty);
    }
    double disc = B * B - 4 * A * C;
    double ls = std::max({std::sqrt(A), arc.r, std::hypot(fx, fy)});
    double dtol = 1e-9 * sc * ls * ls * ls;
    if (disc < -dtol) return true;
    if (disc <= dtol) return false;
    double root = std::sqrt(disc);
    for (double t : {(-B - root) / (2 * A), (-B + root) / (2 * A)}) cand.push_back({seg.ax + t * dx, seg.ay + t * dy});
  } else {
    const Arc& ea = *a.exact;
    const Arc& eb = *b.exact;
    if (ea.center == eb.center) {
      if (ea.radius != eb.radius) return true;
      if (a.mask & b.mask) return false;
      // Co-circular with disjoint sectors: they touch only at shared axis points.
      for (int x : {a.sa, a.ea})
        for (int y : {b.sa, b.ea})
          if (x == y) {
            double px = a.cx + a.r * std::cos(x * kTwoPi / 4), py = a.cy + a.r * std::sin(x * kTwoPi / 4);
            if (!p || std::hypot(px - p[0], py - p[1]) > tol) return false;
          }
      return true;
    }
    double dx = b.cx - a.cx, dy = b.cy - a.cy, d = std::hypot(dx, dy);
    if (d > a.r + b.r + tol || d < std::abs(a.r - b.r) - tol) return true;
    double along = (a.r * a.r - b.r * b.r + d * d) / (2 * d);
    double h2 = a.r * a.r - along * along;
    if (h2 <= tol * sc) return false;
    double h = std::sqrt(h2);
    double mx = a.cx + along * dx / d, my = a.cy + along * dy / d;
    cand.push_back({mx - h * dy / d, my + h * dx / d});
    cand.push_back({mx + h * dy / d, my - h * dx / d});
  }
  for (auto [x, y] : cand) {
    if (p && std::hypot(x - p[0], y - p[1]) <= 1e-7 * sc) continue;
    if (!clearly_off(a, x, y) && !clearly_off(b, x, y)) return false;
  }
  return true;
}

int turn_steps(Dir a, Dir b) {
  int diff = ((static_cast<int>(b) - static_cast<int>(a)) % 8 + 8) % 8;
  return std::min(diff, 8 - diff);
}

std::pair<int, int> monotone_signs(const Primitive& p) {
  Point a = start_of(p), b = end_of(p);
  return {sgn(b.x - a.x), sgn(b.y - a.y)};
}

std::string fine_port(const std::vector<Primitive>& from_v) {
  const Primitive& first = from_v.front();
  std::ostringstream key;
  key << dir_name(start_tangent(first));
  if (auto arc = std::get_if<Arc>(&first)) {
    key << "|arc|" << (arc->turn == Turn::CCW ? "ccw" : "cw") << "|" << arc->radius.get_str();
  } else {
    // Edges sharing a segment out of v are told apart by where and how they leave the bundle.
    const Segment& s = std::get<Segment>(first);
    Rational len = abs(s.b.x - s.a.x) + abs(s.b.y - s.a.y);
    key << "|" << len.get_str() << "|";
    if (from_v.size() < 2) {
      key << "end";
    } else {
      key << to_string(atom_of(from_v[1]));
      if (auto next = std::get_if<Arc>(&from_v[1])) key << "|" << next->radius.get_str();
    }
  }
  return key.str();
}

}  // namespace

ValidationReport validate(const PlanarGraph& g, const Drawing& d, const ValidationOptions& opt) {
  ValidationReport rep;
  if (static_cast<int>(d.coords.size()) != g.n) throw MalformedDrawing("drawing has wrong vertex count");
  if (d.edges.size() != d.geometry.size()) throw MalformedDrawing("edge and geometry lists differ in length");
  const int m = static_cast<int>(d.edges.size());
  {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : d.edges) {
      if (u < 0 || v < 0 || u >= g.n || v >= g.n || !g.has_edge(u, v))
        throw MalformedDrawing("drawing edge " + std::to_string(u) + "-" + std::to_string(v) + " not in graph");
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
        throw MalformedDrawing("edge drawn twice: " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (static_cast<long>(seen.size()) != g.edge_count()) throw MalformedDrawing("drawing misses graph edges");
  }

  std::vector<std::vector<Primitive>> geo(m);
  std::vector<std::vector<Approx>> approx(m);
  for (int i = 0; i < m; ++i) {
    auto [u, v] = d.edges[i];
    geo[i] = normalized(d.geometry[i]);
    std::string name = std::to_string(u) + "-" + std::to_string(v);
    if (geo[i].empty()) throw MalformedDrawing("edge " + name + " has no extent");
    for (const auto& p : geo[i]) {
      if (auto a = std::get_if<Arc>(&p); a && !arc_well_formed(*a)) throw MalformedDrawing("edge " + name + " has a malformed arc");
      approx[i].push_back(approx_of(p));
    }
    if (!(start_of(geo[i].front()) == d.coords[u]) || !(end_of(geo[i].back()) == d.coords[v]))
      throw MalformedDrawing("edge " + name + " does not join its endpoints");
    for (size_t j = 0; j + 1 < geo[i].size(); ++j)
      if (!(end_of(geo[i][j]) == start_of(geo[i][j + 1])))
        throw MalformedDrawing("edge " + name + " has a gap");
  }

  // Model conformance, bends, monotonicity, complexity.
  for (int i = 0; i < m; ++i) {
    const auto& P = geo[i];
    ++rep.complexity[static_cast<int>(P.size())];
    rep.max_complexity = std::max(rep.max_complexity, static_cast<int>(P.size()));
    bool conform = true;
    for (const auto& p : P) {
      if (auto s = std::get_if<Segment>(&p)) {
        SegmentKind k = s->kind();
        bool okk = k == SegmentKind::Horizontal || k == SegmentKind::Vertical ||
                   (d.model == Model::Octilinear && k == SegmentKind::Diagonal);
        conform = conform && okk;
      } else if (d.model == Model::Octilinear) {
        conform = false;
      }
    }
    bool bad_bend = false;
    if (conform) {
      for (size_t j = 0; j + 1 < P.size(); ++j) {
        Dir a = arriving(P[j], approx[i][j]), b = leaving(P[j + 1], approx[i][j + 1]);
        if (d.model == Model::Smooth) {
          if (a != b) conform = false;
        } else {
          int k = turn_steps(a, b);
          int angle = 180 - 45 * k;
          rep.bend_angles.push_back(angle);
          if (k == 4 || (opt.bend_angle != 0 && angle != opt.bend_angle)) bad_bend = true;
        }
      }
    }
    if (!conform) rep.model_violations.push_back(i);
    if (bad_bend) rep.bad_bends.push_back(i);
    int sx = 0, sy = 0;
    bool mono = true;
    for (size_t j = 0; j < P.size(); ++j) {
      const Primitive& p = P[j];
      if (approx[i][j].quarters > 1) mono = false;
      auto [px, py] = monotone_signs(p);
      if (px != 0) {
        if (sx != 0 && px != sx) mono = false;
        sx = px;
      }
      if (py != 0) {
        if (sy != 0 && py != sy) mono = false;
        sy = py;
      }
    }
    if (!mono) rep.non_monotone.push_back(i);
  }
  if (!rep.model_ok()) {
    rep.notes.push_back("model conformance failed; ports not checked");
  } else {
    // Ports.
    std::vector<std::vector<std::pair<std::string, int>>> at(g.n);
    for (int i = 0; i < m; ++i) {
      auto [u, v] = d.edges[i];
      std::vector<Primitive> back;
      for (auto it = geo[i].rbegin(); it != geo[i].rend(); ++it) back.push_back(reversed(*it));
      std::string pu = opt.kandinsky ? fine_port(geo[i]) : dir_name(leaving(geo[i].front(), approx[i].front()));
      std::string pv = opt.kandinsky ? fine_port(back) : dir_name(reversed_leaving(back.front(), approx[i].back()));
      at[u].push_back({pu, i});
      at[v].push_back({pv, i});
    }
    for (int v = 0; v < g.n; ++v) {
      std::sort(at[v].begin(), at[v].end());
      for (size_t j = 0; j + 1 < at[v].size(); ++j)
        if (at[v][j].first == at[v][j + 1].first) {
          rep.port_clashes.push_back(v);
          break;
        }
    }
  }

  // Planarity.
  std::vector<std::vector<Box>> pbox(m);
  std::vector<Box> ebox(m);
  for (int i = 0; i < m; ++i) {
    for (const auto& p : geo[i]) {
      pbox[i].push_back(box_of(approx[i][&p - geo[i].data()]));
    }
    ebox[i] = pbox[i][0];
    for (const auto& b : pbox[i]) ebox[i] = merge(ebox[i], b);
  }

  for (int i = 0; i < m; ++i) {
    const auto& P = geo[i];
    bool bad = false;
    for (size_t a = 0; a < P.size() && !bad; ++a)
      for (size_t b = a + 1; b < P.size() && !bad; ++b) {
        if (!pbox[i][a].overlaps(pbox[i][b])) continue;
        Intersection x = intersect(P[a], P[b]);
        if (x.overlap) bad = true;
        for (const auto& q : x.points)
          if (b != a + 1 || !q.equals(end_of(P[a]))) bad = true;
      }
    if (bad) rep.self_intersecting.push_back(i);
  }

  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ebox[a].x0 < ebox[b].x0; });
  const bool bundles = opt.kandinsky;
  for (int oi = 0; oi < m; ++oi) {
    int e = order[oi];
    for (int oj = oi + 1; oj < m; ++oj) {
      int f = order[oj];
      if (ebox[f].x0 > ebox[e].x1) break;
      if (!ebox[e].overlaps(ebox[f])) continue;
      auto [eu, ev] = d.edges[e];
      auto [fu, fv] = d.edges[f];
      int common = -1;
      if (eu == fu || eu == fv) common = eu;
      if (ev == fu || ev == fv) common = ev;
      std::vector<Point> allowed;
      if (common >= 0) allowed.push_back(d.coords[common]);
      size_t e_end = common == eu ? 0 : geo[e].size() - 1;
      size_t f_end = common == fu ? 0 : geo[f].size() - 1;
      bool cross = false;
      std::vector<Intersection> found;
      for (size_t a = 0; a < geo[e].size() && !cross; ++a)
        for (size_t b = 0; b < geo[f].size() && !cross; ++b) {
          if (!pbox[e][a].overlaps(pbox[f][b])) continue;
          const size_t e_last = geo[e].size() - 1, f_last = geo[f].size() - 1;
          const double* shared = nullptr;
          double pc[2];
          if (common >= 0) {
            bool a_touch = (a == 0 && common == eu) || (a == e_last && common == ev);
            bool b_touch = (b == 0 && common == fu) || (b == f_last && common == fv);
            if (a_touch && b_touch) {
              pc[0] = d.coords[common].x.get_d(), pc[1] = d.coords[common].y.get_d();
              shared = pc;
            }
          }
          if (clear_pair(approx[e][a], approx[f][b], shared)) continue;
          Intersection x = intersect(geo[e][a], geo[f][b]);
          if (x.overlap) {
            const Point& v = common >= 0 ? d.coords[common] : Point{};
            bool bundle = bundles && common >= 0 && a == e_end && b == f_end && !is_arc(geo[e][a]) &&
                          (x.overlap_a == v || x.overlap_b == v);
            if (!bundle) {
              cross = true;
              break;
            }
            allowed.push_back(x.overlap_a == v ? x.overlap_b : x.overlap_a);
          }
          if (!x.points.empty()) found.push_back(std::move(x));
        }
      for (const auto& x : found)
        for (const auto& q : x.points)
          if (std::none_of(allowed.begin(), allowed.end(), [&](const Point& p) { return q.equals(p); })) cross = true;
      if (cross) rep.crossings.push_back({std::min(e, f), std::max(e, f)});
    }
  }
  std::sort(rep.crossings.begin(), rep.crossings.end());

  std::vector<int> vorder(g.n);
  std::vector<double> vx(g.n), vy(g.n);
  for (int v = 0; v < g.n; ++v) {
    vorder[v] = v;
    vx[v] = d.coords[v].x.get_d();
    vy[v] = d.coords[v].y.get_d();
  }
  std::sort(vorder.begin(), vorder.end(), [&](int a, int b) { return vx[a] < vx[b]; });
  for (int e = 0; e < m; ++e) {
    auto [u, v] = d.edges[e];
    auto it = std::lower_bound(vorder.begin(), vorder.end(), ebox[e].x0, [&](int w, double x) { return vx[w] < x; });
    for (; it != vorder.end() && vx[*it] <= ebox[e].x1; ++it) {
      int w = *it;
      if (w == u || w == v || !ebox[e].contains(vx[w], vy[w])) continue;
      for (size_t a = 0; a < geo[e].size(); ++a)
        if (pbox[e][a].contains(vx[w], vy[w]) && contains(geo[e][a], d.coords[w])) {
          rep.vertex_hits.push_back({e, w});
          break;
        }
    }
  }
  std::sort(rep.vertex_hits.begin(), rep.vertex_hits.end());
  return rep;
}

std::string summary(const ValidationReport& r) {
  std::ostringstream out;
  out << "planar=" << (r.planar() ? "yes" : "no") << "\n";
  out << "ports=" << (r.ports_ok() ? "ok" : "clash") << "\n";
  out << "shapes=" << (r.model_ok() ? "ok" : "violated") << "\n";
  out << "bimonotone=" << (r.monotone() ? "yes" : "no") << "\n";
  out << "bends=" << (r.bends_ok() ? "ok" : "bad") << "\n";
  out << "crossings=" << r.crossings.size() << "\n";
  out << "vertex_hits=" << r.vertex_hits.size() << "\n";
  out << "max_complexity=" << r.max_complexity << "\n";
  for (auto [c, k] : r.complexity) out << "complexity_" << c << "=" << k << "\n";
  std::map<int, long> angles;
  for (int a : r.bend_angles) ++angles[a];
  out << "bends_total=" << r.bend_angles.size() << "\n";
  for (auto [a, k] : angles) out << "bend_angle_" << a << "=" << k << "\n";
  out << "valid=" << (r.ok() ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace smog

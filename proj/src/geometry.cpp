#include "smog/geometry.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace smog {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Point& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

Rational parse_rational(const std::string& s) {
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // Decimal literal, read exactly.
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Rational q;
    if (q.set_str(digits, 10) != 0) throw std::invalid_argument("bad number: " + s);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
    q /= den;
    q.canonicalize();
    return q;
  }
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("bad number: " + s);
  q.canonicalize();
  return q;
}

int sign(const Rational& q) { return sgn(q); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

double approx(const Rational& q) { return q.get_d(); }

Dir opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 4) % 8); }

Point dir_vector(Dir d) {
  static const int v[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  int i = static_cast<int>(d);
  return {v[i][0], v[i][1]};
}

const char* dir_name(Dir d) {
  static const char* names[8] = {"E", "NE", "N", "NW", "W", "SW", "S", "SE"};
  return names[static_cast<int>(d)];
}

std::optional<Dir> direction_of(const Rational& dx, const Rational& dy) {
  int sx = sgn(dx), sy = sgn(dy);
  if (sx == 0 && sy == 0) return std::nullopt;
  if (sx != 0 && sy != 0 && abs(dx) != abs(dy)) return std::nullopt;
  static const Dir table[3][3] = {
      {Dir::SW, Dir::W, Dir::NW}, {Dir::S, Dir::E, Dir::N}, {Dir::SE, Dir::E, Dir::NE}};
  return table[sx + 1][sy + 1];
}

SegmentKind Segment::kind() const {
  bool same_x = a.x == b.x, same_y = a.y == b.y;
  if (same_x && same_y) return SegmentKind::Degenerate;
  if (same_y) return SegmentKind::Horizontal;
  if (same_x) return SegmentKind::Vertical;
  if (abs(Rational(b.x - a.x)) == abs(Rational(b.y - a.y))) return SegmentKind::Diagonal;
  return SegmentKind::Other;
}

int axis_index(const Point& c, const Point& p) {
  int sx = cmp(p.x, c.x), sy = cmp(p.y, c.y);
  if (sy == 0 && sx > 0) return 0;
  if (sx == 0 && sy > 0) return 1;
  if (sy == 0 && sx < 0) return 2;
  if (sx == 0 && sy < 0) return 3;
  throw GeometryError("arc endpoint " + to_string(p) + " not axis-aligned with center " + to_string(c));
}


int arc_quarters(const Arc& a) {
  if (a.radius <= 0) throw GeometryError("arc radius must be positive");
  int i = axis_index(a.center, a.start), j = axis_index(a.center, a.end);
  auto off = [&](const Point& p, int k) {
    return k % 2 == 0 ? abs(Rational(p.x - a.center.x)) : abs(Rational(p.y - a.center.y));
  };
  if (off(a.start, i) != a.radius || off(a.end, j) != a.radius)
    throw GeometryError("arc endpoints not on circle");
  int q = a.turn == Turn::CCW ? (j - i + 4) % 4 : (i - j + 4) % 4;
  if (q == 0) throw GeometryError("arc spans a full circle");
  return q;
}

bool arc_well_formed(const Arc& a) {
  try {
    arc_quarters(a);
    return true;
  } catch (const GeometryError&) {
    return false;
  }
}

unsigned arc_quadrants(const Arc& a) {
  int q = arc_quarters(a);
  int i = axis_index(a.center, a.start);
  unsigned mask = 0;
  for (int k = 0; k < q; ++k) {
    int quad = a.turn == Turn::CCW ? (i + k) % 4 : (i - 1 - k + 8) % 4;
    mask |= 1u << quad;
  }
  return mask;
}

Point start_of(const Primitive& p) {
  return std::visit([](const auto& s) { if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Segment>) return s.a; else return s.start; }, p);
}

Point end_of(const Primitive& p) {
  return std::visit([](const auto& s) { if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Segment>) return s.b; else return s.end; }, p);
}

bool is_arc(const Primitive& p) { return std::holds_alternative<Arc>(p); }

Primitive reversed(const Primitive& p) {
  if (auto s = std::get_if<Segment>(&p)) return Segment{s->b, s->a};
  const Arc& a = std::get<Arc>(p);
  return Arc{a.center, a.radius, a.end, a.start, a.turn == Turn::CCW ? Turn::CW : Turn::CCW};
}

static Dir arc_tangent(const Arc& a, const Point& at) {
  int i = axis_index(a.center, at);
  int t = a.turn == Turn::CCW ? (i + 1) % 4 : (i + 3) % 4;
  return static_cast<Dir>(2 * t);
}

Dir start_tangent(const Primitive& p) {
  if (auto s = std::get_if<Segment>(&p)) {
    int sx = cmp(s->b.x, s->a.x), sy = cmp(s->b.y, s->a.y);
    if (sx == 0 || sy == 0) {
      if (sx == 0 && sy == 0) throw GeometryError("segment has no octilinear direction");
      return sx > 0 ? Dir::E : sx < 0 ? Dir::W : sy > 0 ? Dir::N : Dir::S;
    }
    auto d = direction_of(s->b.x - s->a.x, s->b.y - s->a.y);
    if (!d) throw GeometryError("segment has no octilinear direction");
    return *d;
  }
  const Arc& a = std::get<Arc>(p);
  return arc_tangent(a, a.start);
}

Dir end_tangent(const Primitive& p) {
  if (std::holds_alternative<Segment>(p)) return start_tangent(p);
  const Arc& a = std::get<Arc>(p);
  return arc_tangent(a, a.end);
}

bool zero_extent(const Primitive& p) {
  if (auto s = std::get_if<Segment>(&p)) return s->a == s->b;
  return std::get<Arc>(p).radius == 0;
}

Arc quarter_arc(const Point& p, const Point& q, Dir leave) {
  Rational dx = q.x - p.x, dy = q.y - p.y;
  if (dx == 0 || abs(dx) != abs(dy)) throw GeometryError("not-diagonal: " + to_string(p) + " -> " + to_string(q));
  Point c;
  if (leave == Dir::E || leave == Dir::W) {
    if ((leave == Dir::E) != (dx > 0)) throw GeometryError("tangent direction points away from target");
    c = {p.x, q.y};
  } else if (leave == Dir::N || leave == Dir::S) {
    if ((leave == Dir::N) != (dy > 0)) throw GeometryError("tangent direction points away from target");
    c = {q.x, p.y};
  } else {
    throw GeometryError("arc tangent must be axis-aligned");
  }
  int i = axis_index(c, p), j = axis_index(c, q);
  Arc a{c, abs(dx), p, q, (j - i + 4) % 4 == 1 ? Turn::CCW : Turn::CW};
  return a;
}

int QNum::sign() const {
  int sa = sgn(a);
  if (b == 0 || d == 0) return sa;
  int sb = sgn(b);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Rational lhs = a * a, rhs = b * b * d;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

bool QPoint::equals(const Point& p) const {
  // Constructed values keep b == 0 whenever the root is rational.
  return x.a == p.x && y.a == p.y && (x.b == 0 || x.d == 0) && (y.b == 0 || y.d == 0);
}

double QPoint::approx_x() const { return x.a.get_d() + x.b.get_d() * std::sqrt(x.d.get_d()); }
double QPoint::approx_y() const { return y.a.get_d() + y.b.get_d() * std::sqrt(y.d.get_d()); }

namespace {

Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
Point sub(const Point& u, const Point& v) { return {u.x - v.x, u.y - v.y}; }

QNum qsub(const QNum& u, const Rational& r) { return {u.a - r, u.b, u.d}; }

bool in_quadrant(int sx, int sy, int quad) {
  switch (quad) {
    case 0: return sx >= 0 && sy >= 0;
    case 1: return sx <= 0 && sy >= 0;
    case 2: return sx <= 0 && sy <= 0;
    default: return sx >= 0 && sy <= 0;
  }
}

bool on_arc_sector(const Arc& a, int sx, int sy) {
  unsigned m = arc_quadrants(a);
  for (int k = 0; k < 4; ++k)
    if ((m >> k & 1) && in_quadrant(sx, sy, k)) return true;
  return false;
}

bool qpoint_on_arc(const Arc& a, const QPoint& p) {
  return on_arc_sector(a, qsub(p.x, a.center.x).sign(), qsub(p.y, a.center.y).sign());
}

// Square root of a nonnegative rational, if rational.
std::optional<Rational> exact_sqrt(const Rational& q) {
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

// Points base + t*dir on the circle (c, r); restricted to t in [0,1] when bounded.
std::vector<std::pair<QNum, QPoint>> line_circle(const Point& base, const Point& dir, const Point& c,
                                                 const Rational& r, bool bounded) {
  std::vector<std::pair<QNum, QPoint>> out;
  Point w = sub(base, c);
  Rational A = dot(dir, dir), B = 2 * dot(dir, w), C = dot(w, w) - r * r;
  Rational disc = B * B - 4 * A * C;
  if (disc < 0) return out;
  Rational alpha = -B / (2 * A), beta = 1 / (2 * A);
  std::vector<QNum> ts;
  if (disc == 0) {
    ts.push_back({alpha, 0, 0});
  } else if (auto s = exact_sqrt(disc)) {
    ts.push_back({alpha - beta * *s, 0, 0});
    ts.push_back({alpha + beta * *s, 0, 0});
  } else {
    ts.push_back({alpha, -beta, disc});
    ts.push_back({alpha, beta, disc});
  }
  for (const QNum& t : ts) {
    if (bounded && (t.sign() < 0 || QNum{1 - t.a, -t.b, t.d}.sign() < 0)) continue;
    QPoint p{{base.x + t.a * dir.x, t.b * dir.x, t.d}, {base.y + t.a * dir.y, t.b * dir.y, t.d}};
    out.push_back({t, p});
  }
  return out;
}

QPoint rational_qpoint(const Point& p) { return {{p.x, 0, 0}, {p.y, 0, 0}}; }

bool on_segment(const Segment& s, const Point& q) {
  if (cross(sub(s.b, s.a), sub(q, s.a)) != 0) return false;
  return std::min(s.a.x, s.b.x) <= q.x && q.x <= std::max(s.a.x, s.b.x) && std::min(s.a.y, s.b.y) <= q.y &&
         q.y <= std::max(s.a.y, s.b.y);
}

Intersection seg_seg(const Segment& s, const Segment& t) {
  Intersection out;
  if (s.a == s.b || t.a == t.b) {
    const Segment& pt = s.a == s.b ? s : t;
    const Segment& other = s.a == s.b ? t : s;
    if (on_segment(other, pt.a)) out.points.push_back(rational_qpoint(pt.a));
    return out;
  }
  Point d1 = sub(s.b, s.a), d2 = sub(t.b, t.a), w = sub(t.a, s.a);
  Rational den = cross(d1, d2);
  if (den != 0) {
    Rational u = cross(w, d2) / den, v = cross(w, d1) / den;
    if (u >= 0 && u <= 1 && v >= 0 && v <= 1)
      out.points.push_back(rational_qpoint({s.a.x + u * d1.x, s.a.y + u * d1.y}));
    return out;
  }
  if (cross(w, d1) != 0) return out;
  Rational len = dot(d1, d1);
  Rational t0 = dot(w, d1) / len, t1 = dot(sub(t.b, s.a), d1) / len;
  Rational lo = std::max(Rational(0), std::min(t0, t1)), hi = std::min(Rational(1), std::max(t0, t1));
  if (lo > hi) return out;
  Point pa{s.a.x + lo * d1.x, s.a.y + lo * d1.y}, pb{s.a.x + hi * d1.x, s.a.y + hi * d1.y};
  if (lo == hi) {
    out.points.push_back(rational_qpoint(pa));
  } else {
    out.overlap = true;
    out.overlap_a = pa;
    out.overlap_b = pb;
  }
  return out;
}

Intersection seg_arc(const Segment& s, const Arc& a) {
  Intersection out;
  if (s.a == s.b) {
    if (contains(a, s.a)) out.points.push_back(rational_qpoint(s.a));
    return out;
  }
  for (auto& [t, p] : line_circle(s.a, sub(s.b, s.a), a.center, a.radius, true))
    if (qpoint_on_arc(a, p)) out.points.push_back(p);
  return out;
}

Intersection arc_arc(const Arc& a, const Arc& b) {
  Intersection out;
  if (a.center == b.center) {
    if (a.radius != b.radius) return out;
    unsigned ma = arc_quadrants(a), mb = arc_quadrants(b);
    if (ma & mb) {
      out.overlap = true;
      out.overlap_a = a.start;
      out.overlap_b = a.end;
      return out;
    }
    static const int ax[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int k = 0; k < 4; ++k) {
      unsigned bits = (1u << k) | (1u << ((k + 3) % 4));
      if ((ma & bits) && (mb & bits))
        out.points.push_back(rational_qpoint({a.center.x + ax[k][0] * a.radius, a.center.y + ax[k][1] * a.radius}));
    }
    return out;
  }
  Point n = sub(b.center, a.center);
  Rational K = (a.radius * a.radius - b.radius * b.radius + dot(b.center, b.center) - dot(a.center, a.center)) / 2;
  Rational nn = dot(n, n);
  Point p0{n.x * K / nn, n.y * K / nn};
  Point d{-n.y, n.x};
  for (auto& [t, p] : line_circle(p0, d, a.center, a.radius, false))
    if (qpoint_on_arc(a, p) && qpoint_on_arc(b, p)) out.points.push_back(p);
  return out;
}

bool same_primitive(const Primitive& p, const Primitive& q) {
  if (p.index() != q.index()) return false;
  if (auto s = std::get_if<Segment>(&p)) {
    const Segment& t = std::get<Segment>(q);
    return (s->a == t.a && s->b == t.b) || (s->a == t.b && s->b == t.a);
  }
  const Arc& a = std::get<Arc>(p);
  const Arc& b = std::get<Arc>(q);
  return a.center == b.center && a.radius == b.radius && arc_quadrants(a) == arc_quadrants(b);
}

}  // namespace

Intersection intersect(const Primitive& a, const Primitive& b) {
  if (auto s = std::get_if<Segment>(&a)) {
    if (auto t = std::get_if<Segment>(&b)) return seg_seg(*s, *t);
    return seg_arc(*s, std::get<Arc>(b));
  }
  if (auto t = std::get_if<Segment>(&b)) return seg_arc(*t, std::get<Arc>(a));
  return arc_arc(std::get<Arc>(a), std::get<Arc>(b));
}

bool contains(const Primitive& p, const Point& q) {
  if (auto s = std::get_if<Segment>(&p)) return on_segment(*s, q);
  const Arc& a = std::get<Arc>(p);
  Point w = sub(q, a.center);
  if (dot(w, w) != a.radius * a.radius) return false;
  return on_arc_sector(a, sgn(w.x), sgn(w.y));
}

const char* contact_name(Contact c) {
  switch (c) {
    case Contact::Disjoint: return "disjoint";
    case Contact::SharedEndpoint: return "touch-at-shared-endpoint";
    case Contact::Identical: return "identical";
    default: return "cross";
  }
}

Contact primitives_intersect(const Primitive& a, const Primitive& b) {
  if (same_primitive(a, b)) return Contact::Identical;
  Intersection x = intersect(a, b);
  if (x.overlap) return Contact::Cross;
  if (x.points.empty()) return Contact::Disjoint;
  std::array<Point, 2> ea{start_of(a), end_of(a)}, eb{start_of(b), end_of(b)};
  for (const QPoint& p : x.points) {
    bool shared = false;
    for (const Point& u : ea)
      for (const Point& v : eb)
        if (u == v && p.equals(u)) shared = true;
    if (!shared) return Contact::Cross;
  }
  return Contact::SharedEndpoint;
}

}  // namespace smog

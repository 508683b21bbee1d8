#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace smog {

using Rational = mpq_class;

struct Point {
  Rational x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

std::string to_string(const Rational& q);
std::string to_string(const Point& p);
Rational parse_rational(const std::string& s);
int sign(const Rational& q);
Rational abs(const Rational& q);

// Eight compass directions, counter-clockwise starting east. Axis directions are even.
enum class Dir { E = 0, NE, N, NW, W, SW, S, SE };
Dir opposite(Dir d);
Point dir_vector(Dir d);
const char* dir_name(Dir d);
// Direction of the nonzero vector v if it is axis-aligned or diagonal.
std::optional<Dir> direction_of(const Rational& dx, const Rational& dy);

enum class SegmentKind { Horizontal, Vertical, Diagonal, Other, Degenerate };

struct Segment {
  Point a, b;
  SegmentKind kind() const;
};

enum class Turn { CCW, CW };

struct Arc {
  Point center;
  Rational radius;
  Point start, end;
  Turn turn = Turn::CCW;
};

using Primitive = std::variant<Segment, Arc>;

class GeometryError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadrant index 0..3 (E, N, W, S) of the axis point p relative to c; throws if p is not axis-aligned.
int axis_index(const Point& c, const Point& p);
// Number of quarter turns covered by the arc (1, 2 or 3). Throws if malformed.
int arc_quarters(const Arc& a);
// Bitmask of the closed quadrants (bit i = quadrant between axis i and i+1) covered by the arc.
unsigned arc_quadrants(const Arc& a);
bool arc_well_formed(const Arc& a);

Point start_of(const Primitive& p);
Point end_of(const Primitive& p);
Primitive reversed(const Primitive& p);
// Direction of travel leaving the start / arriving at the end.
Dir start_tangent(const Primitive& p);
Dir end_tangent(const Primitive& p);
bool zero_extent(const Primitive& p);
bool is_arc(const Primitive& p);

// Quarter arc from p to q whose tangent at p points along `leave`, an axis direction.
// The tangent at q is then determined.
Arc quarter_arc(const Point& p, const Point& q, Dir leave);

// a + b*sqrt(d) with rational parts; d >= 0 is shared by values that are compared.
struct QNum {
  Rational a, b, d;
  int sign() const;
};

struct QPoint {
  QNum x, y;
  bool equals(const Point& p) const;
  double approx_x() const;
  double approx_y() const;
};

struct Intersection {
  std::vector<QPoint> points;
  // Collinear or co-circular overlap of positive length; the two ends are recorded.
  bool overlap = false;
  Point overlap_a, overlap_b;
};

Intersection intersect(const Primitive& a, const Primitive& b);

enum class Contact { Disjoint, SharedEndpoint, Identical, Cross };
const char* contact_name(Contact c);

Contact primitives_intersect(const Primitive& a, const Primitive& b);

// Exact containment of a rational point in a primitive.
bool contains(const Primitive& p, const Point& q);

double approx(const Rational& q);

}  // namespace smog

#include "smog/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

namespace smog {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

void write_svg(std::ostream& out, const Drawing& d, const SvgOptions& opt) {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  if (!d.coords.empty()) {
    BoundingBox b = bounding_box(d);
    x0 = b.min_x.get_d(), y0 = b.min_y.get_d(), x1 = b.max_x.get_d(), y1 = b.max_y.get_d();
  }
  auto X = [&](const Rational& x) { return num((x.get_d() - x0) * opt.scale + opt.margin); };
  auto Y = [&](const Rational& y) { return num((y1 - y.get_d()) * opt.scale + opt.margin); };
  double w = (x1 - x0) * opt.scale + 2 * opt.margin, h = (y1 - y0) * opt.scale + 2 * opt.margin;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h) << "\" viewBox=\"0 0 "
      << num(w) << " " << num(h) << "\">\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (size_t i = 0; i < d.geometry.size(); ++i) {
    for (const auto& p : d.geometry[i]) {
      if (auto s = std::get_if<Segment>(&p)) {
        out << "<line x1=\"" << X(s->a.x) << "\" y1=\"" << Y(s->a.y) << "\" x2=\"" << X(s->b.x) << "\" y2=\"" << Y(s->b.y)
            << "\"/>\n";
      } else {
        const Arc& a = std::get<Arc>(p);
        std::string r = num(a.radius.get_d() * opt.scale);
        // The y axis is flipped, so counter-clockwise in the drawing is sweep-flag 0 on screen.
        int large = arc_quarters(a) > 2 ? 1 : 0;
        int sweep = a.turn == Turn::CCW ? 0 : 1;
        out << "<path d=\"M " << X(a.start.x) << " " << Y(a.start.y) << " A " << r << " " << r << " 0 " << large << " "
            << sweep << " " << X(a.end.x) << " " << Y(a.end.y) << "\"/>\n";
      }
    }
  }
  out << "</g>\n";
  out << "<g fill=\"white\" stroke=\"black\" stroke-width=\"1\">\n";
  double half = opt.vertex_size / 2;
  for (const auto& c : d.coords) {
    out << "<rect x=\"" << num((c.x.get_d() - x0) * opt.scale + opt.margin - half) << "\" y=\""
        << num((y1 - c.y.get_d()) * opt.scale + opt.margin - half) << "\" width=\"" << num(opt.vertex_size) << "\" height=\""
        << num(opt.vertex_size) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
}

}  // namespace smog

#include "smog/drawing.hpp"

#include <algorithm>

namespace smog {

const char* model_name(Model m) { return m == Model::Smooth ? "smooth" : "octilinear"; }

Model parse_model(const std::string& s) {
  if (s == "smooth") return Model::Smooth;
  if (s == "octilinear") return Model::Octilinear;
  throw std::invalid_argument("unknown model: " + s);
}

int Drawing::find_edge(int u, int v) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if ((edges[i].first == u && edges[i].second == v) || (edges[i].first == v && edges[i].second == u))
      return static_cast<int>(i);
  return -1;
}

std::vector<Primitive> Drawing::path(int u, int v) const {
  int i = find_edge(u, v);
  if (i < 0) throw MalformedDrawing("no edge " + std::to_string(u) + "-" + std::to_string(v));
  if (edges[i].first == u) return geometry[i];
  std::vector<Primitive> out;
  for (auto it = geometry[i].rbegin(); it != geometry[i].rend(); ++it) out.push_back(reversed(*it));
  return out;
}

std::vector<Primitive> normalized(const std::vector<Primitive>& prims) {
  std::vector<Primitive> out;
  for (const auto& p : prims)
    if (!zero_extent(p)) out.push_back(p);
  return out;
}

ShapeAtom atom_of(const Primitive& p) {
  ShapeAtom a;
  a.arc = is_arc(p);
  a.dir = start_tangent(p);
  if (a.arc) {
    const Arc& arc = std::get<Arc>(p);
    a.quarters = arc_quarters(arc);
    a.turn = arc.turn;
  }
  return a;
}

std::string to_string(const ShapeAtom& a) {
  std::string s = dir_name(a.dir);
  if (!a.arc) return "seg-" + s;
  static const char* span[4] = {"", "quarter", "half", "three-quarter"};
  return std::string(span[a.quarters]) + "-arc-" + (a.turn == Turn::CCW ? "ccw" : "cw") + "-" + s;
}

Representation representation_of(const Drawing& d) {
  Representation r;
  r.model = d.model;
  r.edges = d.edges;
  for (const auto& geo : d.geometry) {
    auto prims = normalized(geo);
    std::vector<ShapeAtom> atoms;
    for (const auto& p : prims) atoms.push_back(atom_of(p));
    r.shapes.push_back(atoms);
    if (prims.empty()) {
      r.ports.push_back({Dir::E, Dir::E});
    } else {
      r.ports.push_back({start_tangent(prims.front()), opposite(end_tangent(prims.back()))});
    }
  }
  return r;
}

PreserveResult preserves(const Drawing& d, const Representation& r) {
  PreserveResult res;
  if (d.edges.size() != r.edges.size()) {
    res.ok = false;
    res.mismatch = "edge count differs";
    return res;
  }
  Representation actual = representation_of(d);
  std::map<std::pair<int, int>, int> index;
  for (size_t j = 0; j < d.edges.size(); ++j)
    index[{std::min(d.edges[j].first, d.edges[j].second), std::max(d.edges[j].first, d.edges[j].second)}] = static_cast<int>(j);
  for (size_t i = 0; i < r.edges.size(); ++i) {
    auto [u, v] = r.edges[i];
    std::string name = std::to_string(u) + "-" + std::to_string(v);
    auto it = index.find({std::min(u, v), std::max(u, v)});
    int j = it == index.end() ? -1 : it->second;
    if (j < 0) return {false, "edge " + name + " missing from drawing"};
    auto shape = actual.shapes[j];
    auto ports = actual.ports[j];
    if (d.edges[j].first != u) {
      std::reverse(shape.begin(), shape.end());
      for (auto& a : shape) {
        a.dir = opposite(a.dir);
        if (a.arc) {
          // Reversing an arc flips its turn; the start tangent becomes the reversed end tangent.
          int t = static_cast<int>(a.dir);
          int q = a.quarters;
          t = a.turn == Turn::CCW ? t + 2 * q : t - 2 * q;
          a.dir = static_cast<Dir>(((t % 8) + 8) % 8);
          a.turn = a.turn == Turn::CCW ? Turn::CW : Turn::CCW;
        }
      }
      std::swap(ports.first, ports.second);
    }
    if (shape != r.shapes[i]) {
      std::string want, got;
      for (auto& a : r.shapes[i]) want += to_string(a) + " ";
      for (auto& a : shape) got += to_string(a) + " ";
      return {false, "edge " + name + " shape: expected [" + want + "] got [" + got + "]"};
    }
    if (ports != r.ports[i])
      return {false, "edge " + name + " ports: expected " + dir_name(r.ports[i].first) + "/" +
                         dir_name(r.ports[i].second) + " got " + dir_name(ports.first) + "/" + dir_name(ports.second)};
  }
  return res;
}

std::map<int, long> complexity_stats(const Drawing& d) {
  std::map<int, long> h;
  for (const auto& geo : d.geometry) ++h[static_cast<int>(normalized(geo).size())];
  return h;
}

BoundingBox bounding_box(const Drawing& d) {
  BoundingBox b;
  bool first = true;
  auto add = [&](const Point& p) {
    if (first) {
      b.min_x = b.max_x = p.x;
      b.min_y = b.max_y = p.y;
      first = false;
      return;
    }
    b.min_x = std::min(b.min_x, p.x);
    b.max_x = std::max(b.max_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_y = std::max(b.max_y, p.y);
  };
  for (const auto& p : d.coords) add(p);
  for (const auto& geo : d.geometry)
    for (const auto& prim : geo) {
      add(start_of(prim));
      add(end_of(prim));
      if (auto a = std::get_if<Arc>(&prim); a && a->radius > 0) {
        unsigned m = arc_quadrants(*a);
        const Point& c = a->center;
        const Rational& r = a->radius;
        if (m & 0b1001) add({c.x + r, c.y});
        if (m & 0b0011) add({c.x, c.y + r});
        if (m & 0b0110) add({c.x - r, c.y});
        if (m & 0b1100) add({c.x, c.y - r});
      }
    }
  return b;
}

}  // namespace smog

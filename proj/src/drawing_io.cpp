#include <istream>
#include <ostream>
#include <sstream>

#include "smog/drawing.hpp"

namespace smog {

// Text format:
//   model smooth|octilinear
//   vertices N
//   v id x y                       (N lines)
//   edges M
//   e u v K                        (then K primitive lines)
//   seg ax ay bx by
//   arc cx cy r sx sy ex ey ccw|cw
// Numbers are exact rationals "p/q" or decimals.
void write_drawing(std::ostream& out, const Drawing& d) {
  out << "model " << model_name(d.model) << "\n";
  out << "vertices " << d.coords.size() << "\n";
  for (size_t i = 0; i < d.coords.size(); ++i)
    out << "v " << i << " " << to_string(d.coords[i].x) << " " << to_string(d.coords[i].y) << "\n";
  out << "edges " << d.edges.size() << "\n";
  for (size_t i = 0; i < d.edges.size(); ++i) {
    out << "e " << d.edges[i].first << " " << d.edges[i].second << " " << d.geometry[i].size() << "\n";
    for (const auto& p : d.geometry[i]) {
      if (auto s = std::get_if<Segment>(&p)) {
        out << "seg " << to_string(s->a.x) << " " << to_string(s->a.y) << " " << to_string(s->b.x) << " "
            << to_string(s->b.y) << "\n";
      } else {
        const Arc& a = std::get<Arc>(p);
        out << "arc " << to_string(a.center.x) << " " << to_string(a.center.y) << " " << to_string(a.radius) << " "
            << to_string(a.start.x) << " " << to_string(a.start.y) << " " << to_string(a.end.x) << " "
            << to_string(a.end.y) << " " << (a.turn == Turn::CCW ? "ccw" : "cw") << "\n";
      }
    }
  }
}

void write_representation(std::ostream& out, const Representation& r) {
  out << "model " << model_name(r.model) << "\n";
  out << "edges " << r.edges.size() << "\n";
  for (size_t i = 0; i < r.edges.size(); ++i) {
    out << "r " << r.edges[i].first << " " << r.edges[i].second << " " << dir_name(r.ports[i].first) << " "
        << dir_name(r.ports[i].second);
    for (const auto& a : r.shapes[i]) out << " " << to_string(a);
    out << "\n";
  }
}

Drawing read_drawing(std::istream& in) {
  Drawing d;
  std::string line;
  int lineno = 0;
  auto next = [&](const char* what) -> std::istringstream {
    while (std::getline(in, line)) {
      ++lineno;
      auto p = line.find_first_not_of(" \t\r");
      if (p != std::string::npos && line[p] != '#') return std::istringstream(line);
    }
    throw MalformedDrawing(std::string("unexpected end of drawing, expected ") + what);
  };
  auto fail = [&](const std::string& msg) { return MalformedDrawing("line " + std::to_string(lineno) + ": " + msg); };
  auto num = [&](std::istringstream& ss) {
    std::string tok;
    if (!(ss >> tok)) throw fail("missing number");
    try {
      return parse_rational(tok);
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
  };
  std::string kw, word;
  {
    auto ss = next("model");
    if (!(ss >> kw >> word) || kw != "model") throw fail("expected 'model'");
    try {
      d.model = parse_model(word);
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
  }
  size_t n = 0, m = 0;
  {
    auto ss = next("vertices");
    if (!(ss >> kw >> n) || kw != "vertices") throw fail("expected 'vertices N'");
  }
  d.coords.resize(n);
  std::vector<char> seen(n, 0);
  for (size_t i = 0; i < n; ++i) {
    auto ss = next("vertex");
    size_t id;
    if (!(ss >> kw >> id) || kw != "v" || id >= n || seen[id]) throw fail("bad vertex line");
    seen[id] = 1;
    d.coords[id].x = num(ss);
    d.coords[id].y = num(ss);
  }
  {
    auto ss = next("edges");
    if (!(ss >> kw >> m) || kw != "edges") throw fail("expected 'edges M'");
  }
  for (size_t i = 0; i < m; ++i) {
    auto ss = next("edge");
    int u, v;
    size_t k;
    if (!(ss >> kw >> u >> v >> k) || kw != "e") throw fail("bad edge line");
    d.edges.push_back({u, v});
    std::vector<Primitive> prims;
    for (size_t j = 0; j < k; ++j) {
      auto ps = next("primitive");
      ps >> kw;
      if (kw == "seg") {
        Segment s;
        s.a.x = num(ps);
        s.a.y = num(ps);
        s.b.x = num(ps);
        s.b.y = num(ps);
        prims.push_back(s);
      } else if (kw == "arc") {
        Arc a;
        a.center.x = num(ps);
        a.center.y = num(ps);
        a.radius = num(ps);
        a.start.x = num(ps);
        a.start.y = num(ps);
        a.end.x = num(ps);
        a.end.y = num(ps);
        if (!(ps >> word) || (word != "ccw" && word != "cw")) throw fail("arc needs ccw or cw");
        a.turn = word == "ccw" ? Turn::CCW : Turn::CW;
        prims.push_back(a);
      } else {
        throw fail("unknown primitive '" + kw + "'");
      }
    }
    d.geometry.push_back(std::move(prims));
  }
  return d;
}

}  // namespace smog

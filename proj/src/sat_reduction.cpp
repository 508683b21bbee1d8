#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "gadgets.hpp"
#include "smog/families.hpp"

namespace smog {

void CnfFormula::check() const {
  if (num_vars < 1) throw CnfError("formula needs at least one variable");
  if (clauses.empty()) throw CnfError("formula needs at least one clause");
  for (size_t j = 0; j < clauses.size(); ++j) {
    if (clauses[j].size() != 3)
      throw CnfError("clause " + std::to_string(j + 1) + " has " + std::to_string(clauses[j].size()) +
                     " literals; exactly 3 are required");
    for (int l : clauses[j])
      if (l == 0 || std::abs(l) > num_vars) throw CnfError("literal " + std::to_string(l) + " out of range");
  }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& a) const {
  for (const auto& c : clauses) {
    bool sat = false;
    for (int l : c) sat = sat || (l > 0 ? a[l - 1] : !a[-l - 1]);
    if (!sat) return false;
  }
  return true;
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  int declared = -1;
  std::string line;
  std::vector<int> cur;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> f.num_vars >> declared) || fmt != "cnf") throw CnfError("bad problem line: " + line);
      continue;
    }
    if (declared < 0) throw CnfError("clause before problem line");
    std::istringstream all(line);
    long l;
    while (all >> l) {
      if (l == 0) {
        f.clauses.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(static_cast<int>(l));
      }
    }
    if (!all.eof()) throw CnfError("bad clause line: " + line);
  }
  if (!cur.empty()) f.clauses.push_back(cur);
  if (declared < 0) throw CnfError("missing problem line");
  if (static_cast<int>(f.clauses.size()) != declared)
    throw CnfError("problem line declares " + std::to_string(declared) + " clauses, found " + std::to_string(f.clauses.size()));
  f.check();
  return f;
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const auto& c : f.clauses) {
    for (int l : c) out << l << " ";
    out << "0\n";
  }
}

const char* gadget_name(GadgetKind k) {
  switch (k) {
    case GadgetKind::Unit: return "unit";
    case GadgetKind::Copy: return "copy";
    case GadgetKind::Variable: return "variable";
    case GadgetKind::Parity: return "parity";
    case GadgetKind::Clause: return "clause";
    default: return "crossing";
  }
}

int Reduction::count(GadgetKind k) const {
  return static_cast<int>(std::count_if(gadgets.begin(), gadgets.end(), [&](const Gadget& g) { return g.kind == k; }));
}
int Reduction::positive_var(int x) const { return 2 + 2 * (x - 1); }
int Reduction::negative_var(int x) const { return 3 + 2 * (x - 1); }
int Reduction::free_var(int clause) const { return 2 + 2 * formula.num_vars + clause; }

int expected_crossings(const CnfFormula& f) {
  int total = 0;
  for (const auto& c : f.clauses)
    for (int l : c) total += f.num_vars - std::abs(l);
  return total;
}

namespace detail {

void Sketch::seg(int u, int v, Dir d, LinearTerms len) {
  edges.push_back({u, v});
  atoms.push_back(ShapeAtom{false, d, 0, Turn::CCW});
  lengths.push_back({std::move(len)});
}

void Sketch::arc(int u, int v, Dir start, int quarters, Turn turn, LinearTerms len) {
  edges.push_back({u, v});
  atoms.push_back(ShapeAtom{true, start, quarters, turn});
  lengths.push_back({std::move(len)});
}

namespace {

Dir end_dir(const ShapeAtom& a) {
  if (!a.arc) return a.dir;
  int t = static_cast<int>(a.dir) + (a.turn == Turn::CCW ? 2 : -2) * a.quarters;
  return static_cast<Dir>(((t % 8) + 8) % 8);
}

Rational extent(const EdgeLength& l, const std::vector<Rational>& values) {
  Rational r = 0;
  for (const auto& [c, v] : l.terms) r += c * values[v];
  return r;
}

Point rot(const Point& p, Turn t) { return t == Turn::CCW ? Point{-p.y, p.x} : Point{p.y, -p.x}; }

Point scaled(const Point& p, const Rational& r) { return {p.x * r, p.y * r}; }

// Offset of the arc centre from the start, and of the end from the start.
std::pair<Point, Point> arc_offsets(const ShapeAtom& a, const Rational& r) {
  Point n = rot(dir_vector(a.dir), a.turn);
  Point c = scaled(n, r);
  Point e = scaled(Point{-n.x, -n.y}, r);
  for (int q = 0; q < a.quarters; ++q) e = rot(e, a.turn);
  return {c, Point{c.x + e.x, c.y + e.y}};
}

Point displacement(const ShapeAtom& a, const Rational& r) {
  if (!a.arc) return scaled(dir_vector(a.dir), r);
  return arc_offsets(a, r).second;
}

}  // namespace

Representation representation_from(const Sketch& s) {
  Representation r;
  r.model = s.model;
  r.edges = s.edges;
  for (const auto& a : s.atoms) {
    r.shapes.push_back({a});
    r.ports.push_back({a.dir, opposite(end_dir(a))});
  }
  return r;
}

std::vector<Point> place_sketch(const Sketch& s, const std::vector<Rational>& values, int root) {
  std::vector<std::vector<int>> inc(s.n);
  for (size_t i = 0; i < s.edges.size(); ++i) {
    inc[s.edges[i].first].push_back(static_cast<int>(i));
    inc[s.edges[i].second].push_back(static_cast<int>(i));
  }
  std::vector<Point> disp(s.edges.size());
  for (size_t i = 0; i < s.edges.size(); ++i) disp[i] = displacement(s.atoms[i], extent(s.lengths[i], values));
  std::vector<Point> pos(s.n);
  std::vector<char> seen(s.n, 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  pos[root] = {0, 0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int i : inc[v]) {
      auto [a, b] = s.edges[i];
      int w = a == v ? b : a;
      if (seen[w]) continue;
      seen[w] = 1;
      const Point& d = disp[i];
      pos[w] = a == v ? Point{pos[v].x + d.x, pos[v].y + d.y} : Point{pos[v].x - d.x, pos[v].y - d.y};
      stack.push_back(w);
    }
  }
  for (int v = 0; v < s.n; ++v)
    if (!seen[v]) throw ConstructionError("vertex " + std::to_string(v) + " is not connected to the sketch");
  for (size_t i = 0; i < s.edges.size(); ++i) {
    auto [a, b] = s.edges[i];
    if (!(Point{pos[a].x + disp[i].x, pos[a].y + disp[i].y} == pos[b]))
      throw ConstructionError("edge " + std::to_string(a) + "-" + std::to_string(b) + " does not close its cycle");
  }
  return pos;
}

Drawing draw_sketch(const Sketch& s, const std::vector<Point>& coords, const std::vector<Rational>& values) {
  Drawing d;
  d.model = s.model;
  d.coords = coords;
  d.edges = s.edges;
  for (size_t i = 0; i < s.edges.size(); ++i) {
    const Point& p = coords[s.edges[i].first];
    const Point& q = coords[s.edges[i].second];
    const ShapeAtom& a = s.atoms[i];
    if (!a.arc) {
      d.geometry.push_back({Segment{p, q}});
    } else {
      Rational r = extent(s.lengths[i], values);
      Point c = arc_offsets(a, r).first;
      d.geometry.push_back({Arc{{p.x + c.x, p.y + c.y}, r, p, q, a.turn}});
    }
  }
  return d;
}

Ports emit_parity(Sketch& s, const ParityVars& pv) {
  const int first = s.n;
  LinearTerms U{{1, pv.unit}}, X{{1, pv.pos}}, NX{{1, pv.neg}};
  LinearTerms third{{Rational(1, 3), pv.unit}}, four_thirds{{Rational(4, 3), pv.unit}};
  auto chain = [&](int from, Dir d, const std::vector<LinearTerms>& lens) {
    std::vector<int> vs{from};
    for (const auto& l : lens) {
      int w = s.vertex();
      s.seg(vs.back(), w, d, l);
      vs.push_back(w);
    }
    return vs;
  };
  int bl = s.vertex();
  auto bottom = chain(bl, Dir::E, {U, U, U});
  int br = bottom.back();
  // Left wall: two copies of x below the block, two copies of not-x above it.
  auto left = chain(bl, Dir::N, {X, X, U, U, NX, NX});
  auto right = chain(br, Dir::N, {NX, NX, U, U, X, X});
  int tl = left.back();
  auto top = chain(tl, Dir::E, {U, U});
  s.seg(top.back(), right.back(), Dir::E, U);

  // Block: two stacked unit squares on the wall, pointing into the gap.
  auto block = [&](const std::vector<int>& wall, Dir in, bool mirrored) {
    int a0 = s.vertex(), a1 = s.vertex(), a2 = s.vertex();
    s.seg(wall[2], a0, in, U);
    s.seg(wall[3], a1, in, U);
    s.seg(wall[4], a2, in, U);
    s.seg(a0, a1, Dir::N, U);
    s.seg(a1, a2, Dir::N, U);
    if (s.model == Model::Smooth) {
      int t = s.vertex();
      s.seg(a1, t, in, U);
      s.arc(t, a2, Dir::N, 1, mirrored ? Turn::CW : Turn::CCW, U);
      s.arc(t, a0, Dir::S, 1, mirrored ? Turn::CCW : Turn::CW, U);
    } else {
      int e0 = s.vertex(), e2 = s.vertex(), t = s.vertex();
      s.seg(a0, e0, in, third);
      s.seg(a2, e2, in, third);
      s.seg(a1, t, in, four_thirds);
      s.seg(e2, t, mirrored ? Dir::SW : Dir::SE, U);
      s.seg(e0, t, mirrored ? Dir::NW : Dir::NE, U);
    }
  };
  block(left, Dir::E, false);
  block(right, Dir::W, true);
  Ports p{bl, br, {}};
  for (int v = first; v < s.n; ++v) p.vertices.push_back(v);
  return p;
}

}  // namespace detail

using detail::Ports;
using detail::Sketch;

namespace {

constexpr int kUnitVar = 0;
constexpr int kSpacerVar = 1;
constexpr int kLevelHeight = 10;

LinearTerms one(int var) { return {{1, var}}; }

Ports emit_unit(Sketch& s) {
  int a = s.vertex(), b = s.vertex();
  s.seg(a, b, Dir::E, one(kUnitVar));
  return {a, b, {a, b}};
}

// Three spokes of length L around a centre; the upper half disc is split into two quarter arcs
// and the lower half is one half arc.
Ports emit_copy(Sketch& s, int var) {
  int o = s.vertex(), a = s.vertex(), b = s.vertex(), c = s.vertex();
  auto L = one(var);
  s.seg(o, a, Dir::E, L);
  s.seg(o, b, Dir::N, L);
  s.seg(o, c, Dir::W, L);
  if (s.model == Model::Smooth) {
    s.arc(a, b, Dir::N, 1, Turn::CCW, L);
    s.arc(b, c, Dir::W, 1, Turn::CCW, L);
    s.arc(a, c, Dir::S, 2, Turn::CW, L);
    return {c, a, {o, a, b, c}};
  }
  int d = s.vertex();
  s.seg(a, b, Dir::NW, L);
  s.seg(b, c, Dir::SW, L);
  s.seg(a, d, Dir::SW, L);
  s.seg(d, c, Dir::NW, L);
  return {c, a, {o, a, b, c, d}};
}

// Quarter arc of radius 3 l(u): three unit edges on its left leg, l(x) + l(not x) on its bottom leg.
Ports emit_variable(Sketch& s, int pos, int neg) {
  int o = s.vertex(), p1 = s.vertex(), p2 = s.vertex(), p = s.vertex(), m = s.vertex(), q = s.vertex();
  auto U = one(kUnitVar);
  s.seg(o, p1, Dir::N, U);
  s.seg(p1, p2, Dir::N, U);
  s.seg(p2, p, Dir::N, U);
  s.seg(o, m, Dir::E, one(pos));
  s.seg(m, q, Dir::E, one(neg));
  LinearTerms r{{3, kUnitVar}};
  if (s.model == Model::Smooth)
    s.arc(p, q, Dir::E, 1, Turn::CW, r);
  else
    s.seg(p, q, Dir::SE, r);
  return {o, q, {o, p1, p2, p, m, q}};
}

// Literals along the bottom leg, four unit edges and the free edge up the right leg.
Ports emit_clause(Sketch& s, const std::vector<int>& lits, int free) {
  int p = s.vertex(), m1 = s.vertex(), m2 = s.vertex(), o = s.vertex();
  s.seg(p, m1, Dir::E, one(lits[0]));
  s.seg(m1, m2, Dir::E, one(lits[1]));
  s.seg(m2, o, Dir::E, one(lits[2]));
  std::vector<int> vs{p, m1, m2, o};
  int prev = o;
  for (int k = 0; k < 5; ++k) {
    int w = s.vertex();
    s.seg(prev, w, Dir::N, one(k < 4 ? kUnitVar : free));
    vs.push_back(w);
    prev = w;
  }
  LinearTerms r{{1, lits[0]}, {1, lits[1]}, {1, lits[2]}};
  if (s.model == Model::Smooth)
    s.arc(p, prev, Dir::N, 1, Turn::CW, r);
  else
    s.seg(p, prev, Dir::NE, r);
  return {p, o, vs};
}

Ports emit_crossing(Sketch& s, int horizontal, int vertical) {
  int p0 = s.vertex(), p1 = s.vertex(), p2 = s.vertex(), p3 = s.vertex();
  s.seg(p0, p1, Dir::E, one(horizontal));
  s.seg(p1, p2, Dir::N, one(vertical));
  s.seg(p3, p2, Dir::E, one(horizontal));
  s.seg(p0, p3, Dir::N, one(vertical));
  return {p0, p1, {p0, p1, p2, p3}};
}

void wire(Sketch& s, int out, int in, int dlevel) {
  int w1 = s.vertex();
  s.seg(out, w1, Dir::E, one(kSpacerVar));
  int last = w1;
  if (dlevel != 0) {
    int w2 = s.vertex();
    s.seg(w1, w2, dlevel > 0 ? Dir::N : Dir::S, {{kLevelHeight * std::abs(dlevel), kSpacerVar}});
    last = w2;
  }
  s.seg(last, in, Dir::E, one(kSpacerVar));
}

Sketch sketch_of(const Reduction& r) {
  Sketch s;
  s.model = r.model;
  s.n = r.graph.n;
  s.edges = r.rep.edges;
  for (const auto& sh : r.rep.shapes) s.atoms.push_back(sh.front());
  s.lengths = r.lengths;
  return s;
}

}  // namespace

Reduction build_reduction(const CnfFormula& f, Model model) {
  f.check();
  Reduction r;
  r.formula = f;
  r.model = model;
  const int nu = f.num_vars, mu = static_cast<int>(f.clauses.size());
  r.vars.push_back({VarKind::Unit, 0, "u"});
  r.vars.push_back({VarKind::Spacer, 0, "s"});
  for (int x = 1; x <= nu; ++x) {
    r.vars.push_back({VarKind::Positive, x, "x" + std::to_string(x)});
    r.vars.push_back({VarKind::Negative, x, "~x" + std::to_string(x)});
  }
  for (int j = 0; j < mu; ++j) r.vars.push_back({VarKind::Free, j, "f" + std::to_string(j + 1)});
  auto lit_var = [&](int l) { return l > 0 ? r.positive_var(l) : r.negative_var(-l); };

  Sketch s;
  s.model = model;
  int prev_out = -1, prev_level = 0;
  auto add = [&](GadgetKind kind, std::string label, int level, Ports p, int parent = -1) {
    if (prev_out >= 0) wire(s, prev_out, p.in, level - prev_level);
    prev_out = p.out;
    prev_level = level;
    r.gadgets.push_back({kind, std::move(label), std::move(p.vertices), parent});
    return static_cast<int>(r.gadgets.size()) - 1;
  };

  // Unit length and its copies, lowest row. Each copy consumes one unit edge and yields three.
  const int consumers = 4 * nu + 4 * mu;
  const int copies = consumers / 2;
  int unit = add(GadgetKind::Unit, "u", 0, emit_unit(s));
  std::vector<int> tree;
  for (int k = 0; k < copies; ++k) {
    int parent = k == 0 ? unit : tree[(k - 1) / 3];
    tree.push_back(add(GadgetKind::Copy, "u" + std::to_string(k + 1), 0, emit_copy(s, kUnitVar), parent));
  }
  if (1 + 2 * copies < consumers) throw ConstructionError("copy tree too small");

  // Variables descend to the right; each parity gadget sits below and right of its variable gadget.
  for (int x = 1; x <= nu; ++x) {
    int level = 3 + 2 * (nu - x);
    std::string name = "x" + std::to_string(x);
    add(GadgetKind::Variable, name, level + 1, emit_variable(s, r.positive_var(x), r.negative_var(x)));
    add(GadgetKind::Copy, name, level, emit_copy(s, r.positive_var(x)));
    add(GadgetKind::Copy, "~" + name, level, emit_copy(s, r.negative_var(x)));
    add(GadgetKind::Parity, name, level, detail::emit_parity(s, {kUnitVar, r.positive_var(x), r.negative_var(x)}));
    r.constraints.push_back({{{3, kUnitVar}, {-1, r.positive_var(x)}, {-1, r.negative_var(x)}}, "variable " + name});
  }

  // Clauses to the right; literal crossings sit above each clause gadget.
  for (int j = 0; j < mu; ++j) {
    const auto& c = f.clauses[j];
    std::string name = "c" + std::to_string(j + 1);
    for (int l : c) add(GadgetKind::Copy, name + ":" + std::to_string(l), 2, emit_copy(s, lit_var(l)));
    for (int l : c)
      for (int y = std::abs(l) + 1; y <= nu; ++y)
        add(GadgetKind::Crossing, name + ":" + std::to_string(l) + "/x" + std::to_string(y), 2,
            emit_crossing(s, lit_var(l), r.positive_var(y)));
    std::vector<int> lits{lit_var(c[0]), lit_var(c[1]), lit_var(c[2])};
    add(GadgetKind::Clause, name, 1, emit_clause(s, lits, r.free_var(j)));
    r.constraints.push_back({{{1, lits[0]}, {1, lits[1]}, {1, lits[2]}, {-4, kUnitVar}, {-1, r.free_var(j)}}, "clause " + name});
  }

  r.root = 0;
  r.rep = detail::representation_from(s);
  r.lengths = s.lengths;

  // Embed from a nominal placement: every literal at 3/2, every free edge at 1/2.
  std::map<int, Rational> nominal;
  for (int x = 1; x <= nu; ++x) nominal[r.positive_var(x)] = nominal[r.negative_var(x)] = Rational(3, 2);
  for (int j = 0; j < mu; ++j) nominal[r.free_var(j)] = Rational(1, 2);
  auto solved = propagate(r, nominal);
  std::vector<Rational> values;
  for (auto& v : solved) values.push_back(*v);
  Drawing d = detail::draw_sketch(s, detail::place_sketch(s, values, r.root), values);
  r.graph = embed_from_drawing(d);
  check_embedding(r.graph);
  for (int v = 0; v < r.graph.n; ++v)
    if (r.graph.degree(v) > 4) throw ConstructionError("vertex " + std::to_string(v) + " has degree above 4");
  return r;
}

std::vector<std::optional<Rational>> propagate(const Reduction& r, const std::map<int, Rational>& fixed) {
  std::vector<std::optional<Rational>> val(r.vars.size());
  for (size_t i = 0; i < r.vars.size(); ++i)
    if (r.vars[i].kind == VarKind::Unit || r.vars[i].kind == VarKind::Spacer) val[i] = Rational(1);
  for (auto& [k, v] : fixed) {
    if (k < 0 || k >= static_cast<int>(val.size())) throw ConstructionError("unknown length variable " + std::to_string(k));
    val[k] = v;
  }
  std::vector<char> done(r.constraints.size(), 0);
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t c = 0; c < r.constraints.size(); ++c) {
      if (done[c]) continue;
      const auto& con = r.constraints[c];
      Rational sum = 0;
      int unknown = -1, unknowns = 0;
      Rational coeff;
      for (const auto& [k, v] : con.terms) {
        if (val[v]) {
          sum += k * *val[v];
        } else {
          ++unknowns;
          unknown = v;
          coeff = k;
        }
      }
      if (unknowns > 1) continue;
      done[c] = 1;
      progress = true;
      if (unknowns == 0) {
        if (sum != 0) throw ConstructionError("conflicting lengths in " + con.why);
      } else {
        val[unknown] = Rational(-sum / coeff);
      }
    }
  }
  for (size_t i = 0; i < val.size(); ++i)
    if (!val[i]) throw ConstructionError("length " + r.vars[i].name + " is not determined");
  return val;
}

Drawing place(const Reduction& r, const std::vector<Rational>& values) {
  Sketch s = sketch_of(r);
  return detail::draw_sketch(s, detail::place_sketch(s, values, r.root), values);
}

Realization realize_lengths(const Reduction& r, const std::map<int, Rational>& fixed) {
  Realization out;
  auto solved = propagate(r, fixed);
  for (auto& v : solved) out.values.push_back(*v);
  const Rational& lu = out.values[kUnitVar];
  for (size_t i = 0; i < r.vars.size(); ++i) {
    const LengthVar& var = r.vars[i];
    if (var.kind == VarKind::Free && out.values[i] < lu / 100) {
      const auto& c = r.formula.clauses[var.index];
      Rational sum = out.values[i] + 4 * lu;
      out.reason = "clause " + std::to_string(var.index + 1) + " (" + std::to_string(c[0]) + " " + std::to_string(c[1]) + " " +
                   std::to_string(c[2]) + "): literal lengths sum to " + to_string(sum) + ", need more than 4 l(u) + 0.01 l(u)";
      return out;
    }
    if (out.values[i] <= 0) {
      out.reason = "length " + var.name + " = " + to_string(out.values[i]) + " is not positive";
      return out;
    }
  }
  out.drawing = place(r, out.values);
  ValidationReport rep = validate(r.graph, out.drawing);
  if (!rep.planar()) {
    std::vector<int> owner(r.graph.n, -1);
    for (size_t g = 0; g < r.gadgets.size(); ++g)
      for (int v : r.gadgets[g].vertices) owner[v] = static_cast<int>(g);
    std::set<std::string> where;
    auto note = [&](int e) {
      int g = owner[out.drawing.edges[e].first];
      if (g >= 0) where.insert(std::string(gadget_name(r.gadgets[g].kind)) + " " + r.gadgets[g].label);
    };
    for (auto [a, b] : rep.crossings) note(a), note(b);
    for (auto [e, v] : rep.vertex_hits) note(e);
    std::string names;
    for (const auto& w : where) names += (names.empty() ? "" : ", ") + w;
    out.reason = std::to_string(rep.crossings.size()) + " crossings and " + std::to_string(rep.vertex_hits.size()) +
                 " vertex hits in " + names;
    return out;
  }
  if (!rep.ports_ok() || !rep.model_ok()) throw ConstructionError("realized drawing violates ports or model");
  auto pr = preserves(out.drawing, r.rep);
  if (!pr.ok) throw ConstructionError("realized drawing does not preserve the representation: " + pr.mismatch);
  out.ok = true;
  return out;
}

Realization realize(const Reduction& r, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != r.formula.num_vars)
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) + " values for " +
                                std::to_string(r.formula.num_vars) + " variables");
  std::map<int, Rational> fixed{{kUnitVar, Rational(1)}};
  for (int x = 1; x <= r.formula.num_vars; ++x) fixed[r.positive_var(x)] = assignment[x - 1] ? Rational(39, 20) : Rational(21, 20);
  return realize_lengths(r, fixed);
}

}  // namespace smog

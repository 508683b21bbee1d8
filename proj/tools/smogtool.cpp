#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "smog/families.hpp"
#include "smog/layout.hpp"
#include "smog/sat_reduction.hpp"
#include "smog/svg.hpp"

using namespace smog;

namespace {

// Exit codes.
constexpr int kOk = 0, kInputError = 1, kNotMaximal = 2, kInfeasible = 3, kInvalid = 4;

struct Failure {
  int code;
  std::string message;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kInputError, "cannot open " + path};
  return in;
}

void save(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Failure{kInputError, "cannot write " + path};
  out << text;
}

template <class F>
std::string render(F&& f) {
  std::ostringstream s;
  f(s);
  return s.str();
}

int cmd_layout(const std::string& graph_file, const std::string& model_s, bool refine, bool trace,
               const std::string& out_file) {
  auto in = open_in(graph_file);
  PlanarGraph g = read_graph(in);
  check_embedding(g);
  MaximalityReport mr = check_maximal_planar(g);
  if (!mr.ok) {
    std::cerr << "graph is not maximal planar: " << mr.missing_edges << " missing edges\n";
    std::cout << "maximal=no\nmissing_edges=" << mr.missing_edges << "\n";
    return kNotMaximal;
  }
  Model model = parse_model(model_s);
  Layout l;
  StretchTrace tr;
  if (refine) {
    l = layout_refined(g, &tr);
  } else {
    l = layout_smooth(g, canonical_order(g));
  }
  if (model == Model::Octilinear) l = to_octilinear(l);
  ValidationOptions opt;
  opt.kandinsky = true;
  if (model == Model::Octilinear && !refine) opt.bend_angle = 135;
  ValidationReport rep = validate(g, l.drawing, opt);
  if (!out_file.empty()) save(out_file, render([&](std::ostream& o) { write_drawing(o, l.drawing); }));
  if (trace)
    for (size_t i = 0; i < tr.cuts.size(); ++i) {
      const CutRecord& c = tr.cuts[i];
      std::cout << "cut " << i + 1 << " upper=" << c.upper << " lower=" << c.lower << " delta=" << to_string(c.delta)
                << " x=" << to_string(c.cut_x) << (c.mirrored ? " mirrored" : "") << "\n";
    }
  BoundingBox bb = bounding_box(l.drawing);
  std::cout << "vertices=" << g.n << "\nedges=" << g.edge_count() << "\nmodel=" << model_name(model)
            << "\nrefined=" << (refine ? "yes" : "no") << "\n";
  if (refine) std::cout << "cuts=" << tr.cuts.size() << "\n";
  std::cout << "width=" << to_string(bb.width()) << "\nheight=" << to_string(bb.height()) << "\n";
  std::cout << summary(rep);
  return rep.ok() ? kOk : kInvalid;
}

int cmd_generate(const std::string& family, int k, const std::string& prefix) {
  PlanarGraph g;
  try {
    g = gen_family(family, k);
  } catch (const DomainError& e) {
    throw Failure{kInputError, e.what()};
  }
  save(prefix + ".graph", render([&](std::ostream& o) { write_graph(o, g); }));
  int certificates = 0;
  if (family == "trains") {
    Certificates c = gen_trains_certificates(k);
    save(prefix + ".smooth.drawing", render([&](std::ostream& o) { write_drawing(o, c.smooth); }));
    save(prefix + ".octilinear.drawing", render([&](std::ostream& o) { write_drawing(o, c.octilinear); }));
    certificates = 2;
  }
  int maxdeg = 0;
  for (int v = 0; v < g.n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
  std::cout << "family=" << family << "\nk=" << k << "\nvertices=" << g.n << "\nedges=" << g.edge_count()
            << "\nmax_degree=" << maxdeg << "\nbiconnected_components=" << biconnected_component_sizes(g).size()
            << "\ncertificates=" << certificates << "\n";
  return kOk;
}

void write_lengths(std::ostream& o, const Reduction& r) {
  auto terms = [&](const LinearTerms& t) {
    std::string s;
    for (const auto& [c, v] : t) s += (s.empty() ? "" : " + ") + to_string(c) + "*" + r.vars[v].name;
    return s;
  };
  o << "vars " << r.vars.size() << "\n";
  for (size_t i = 0; i < r.vars.size(); ++i) o << "var " << i << " " << r.vars[i].name << "\n";
  o << "constraints " << r.constraints.size() << "\n";
  for (const auto& c : r.constraints) o << "c " << terms(c.terms) << " = 0  # " << c.why << "\n";
  o << "lengths " << r.lengths.size() << "\n";
  for (size_t i = 0; i < r.lengths.size(); ++i)
    o << "l " << r.rep.edges[i].first << " " << r.rep.edges[i].second << " " << terms(r.lengths[i].terms) << "\n";
}

int cmd_reduce(const std::string& cnf_file, const std::string& model_s, const std::string& bits,
               const std::string& prefix) {
  auto in = open_in(cnf_file);
  CnfFormula f;
  try {
    f = parse_dimacs(in);
    f.check();
  } catch (const CnfError& e) {
    throw Failure{kInputError, e.what()};
  }
  Reduction r = build_reduction(f, parse_model(model_s));
  if (!prefix.empty()) {
    save(prefix + ".graph", render([&](std::ostream& o) { write_graph(o, r.graph); }));
    save(prefix + ".rep", render([&](std::ostream& o) { write_representation(o, r.rep); }));
    save(prefix + ".lengths", render([&](std::ostream& o) { write_lengths(o, r); }));
  }
  int maxdeg = 0;
  for (int v = 0; v < r.graph.n; ++v) maxdeg = std::max(maxdeg, r.graph.degree(v));
  std::cout << "variables=" << f.num_vars << "\nclauses=" << f.clauses.size() << "\nmodel=" << model_name(r.model)
            << "\nvertices=" << r.graph.n << "\nedges=" << r.graph.edge_count() << "\nmax_degree=" << maxdeg << "\n";
  for (GadgetKind k : {GadgetKind::Unit, GadgetKind::Copy, GadgetKind::Variable, GadgetKind::Parity, GadgetKind::Clause,
                       GadgetKind::Crossing})
    std::cout << "gadgets_" << gadget_name(k) << "=" << r.count(k) << "\n";
  if (bits.empty()) return kOk;

  if (static_cast<int>(bits.size()) != f.num_vars || bits.find_first_not_of("01") != std::string::npos)
    throw Failure{kInputError, "--assign needs " + std::to_string(f.num_vars) + " bits of 0/1"};
  std::vector<bool> assignment;
  for (char c : bits) assignment.push_back(c == '1');
  std::cout << "assignment=" << bits << "\nsatisfies=" << (f.satisfied_by(assignment) ? "yes" : "no") << "\n";
  Realization z = realize(r, assignment);
  if (!z.ok) {
    std::cerr << "infeasible: " << z.reason << "\n";
    std::cout << "feasible=no\nreason=" << z.reason << "\n";
    return kInfeasible;
  }
  if (!prefix.empty()) save(prefix + ".drawing", render([&](std::ostream& o) { write_drawing(o, z.drawing); }));
  ValidationReport rep = validate(r.graph, z.drawing);
  PreserveResult pr = preserves(z.drawing, r.rep);
  // Half arcs make reduction drawings non-monotone, so monotonicity is not part of the verdict.
  bool certified = rep.planar() && rep.ports_ok() && rep.model_ok() && pr.ok;
  std::cout << "feasible=yes\npreserves=" << (pr.ok ? "yes" : "no") << "\n" << summary(rep)
            << "certified=" << (certified ? "yes" : "no") << "\n";
  return certified ? kOk : kInvalid;
}

int cmd_render(const std::string& drawing_file, double scale, const std::string& out_file) {
  auto in = open_in(drawing_file);
  Drawing d = read_drawing(in);
  for (const auto& geo : d.geometry)
    for (const auto& p : geo)
      if (auto a = std::get_if<Arc>(&p); a && !arc_well_formed(*a)) throw Failure{kInputError, "malformed arc in drawing"};
  SvgOptions opt;
  opt.scale = scale;
  std::string svg = render([&](std::ostream& o) { write_svg(o, d, opt); });
  if (out_file.empty())
    std::cout << svg;
  else
    save(out_file, svg);
  return kOk;
}

int cmd_validate(const std::string& graph_file, const std::string& drawing_file, bool kandinsky, int bend_angle,
                 bool allow_nonmonotone) {
  auto gin = open_in(graph_file);
  PlanarGraph g = read_graph(gin);
  auto din = open_in(drawing_file);
  Drawing d = read_drawing(din);
  ValidationOptions opt;
  opt.kandinsky = kandinsky;
  opt.bend_angle = bend_angle;
  ValidationReport rep = validate(g, d, opt);
  std::cout << summary(rep);
  bool ok = rep.planar() && rep.ports_ok() && rep.model_ok() && rep.bends_ok() && (allow_nonmonotone || rep.monotone());
  return ok ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth orthogonal and octilinear drawing tool"};
  app.require_subcommand(1);

  std::string graph_file, drawing_file, cnf_file, out, model = "smooth", family, bits;
  bool refine = false, trace = false, kandinsky = false, allow_nonmonotone = false;
  int k = 1, bend_angle = 0;
  double scale = 40;
  const std::vector<std::string> models{"smooth", "octilinear"};

  auto* layout = app.add_subcommand("layout", "Draw a maximal planar graph");
  layout->add_option("graph", graph_file)->required();
  layout->add_option("--model", model)->check(CLI::IsMember(models));
  layout->add_flag("--refine", refine, "Stretch to at least n-1 bendless edges");
  layout->add_flag("--trace", trace, "Print every vertical cut");
  layout->add_option("-o,--out", out, "Drawing file");

  auto* generate = app.add_subcommand("generate", "Write a graph family member");
  generate->add_option("family", family)->required();
  generate->add_option("k", k);
  generate->add_option("-o,--out", out, "Output prefix")->required();

  auto* reduce = app.add_subcommand("reduce", "Build the drawing instance of a 3-CNF formula");
  reduce->add_option("cnf", cnf_file)->required();
  reduce->add_option("--model", model)->check(CLI::IsMember(models));
  reduce->add_option("--assign", bits, "Truth values, one bit per variable");
  reduce->add_option("-o,--out", out, "Output prefix");

  auto* rend = app.add_subcommand("render", "Export a drawing as SVG");
  rend->add_option("drawing", drawing_file)->required();
  rend->add_option("--scale", scale, "Pixels per unit")->check(CLI::PositiveNumber);
  rend->add_option("-o,--out", out, "SVG file");

  auto* val = app.add_subcommand("validate", "Check a drawing against its graph");
  val->add_option("graph", graph_file)->required();
  val->add_option("drawing", drawing_file)->required();
  val->add_flag("--kandinsky", kandinsky);
  val->add_option("--bend-angle", bend_angle);
  val->add_flag("--allow-nonmonotone", allow_nonmonotone);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*layout) return cmd_layout(graph_file, model, refine, trace, out);
    if (*generate) return cmd_generate(family, k, out);
    if (*reduce) return cmd_reduce(cnf_file, model, bits, out);
    if (*rend) return cmd_render(drawing_file, scale, out);
    if (*val) return cmd_validate(graph_file, drawing_file, kandinsky, bend_angle, allow_nonmonotone);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

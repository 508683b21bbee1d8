#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smog/drawing.hpp"
#include "smog/graph.hpp"

namespace smog {

class CnfError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ConstructionError : public std::logic_error {
  using std::logic_error::logic_error;
};

// Literal +i / -i refers to variable i (1-based).
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  void check() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

CnfFormula parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CnfFormula& f);

enum class GadgetKind { Unit, Copy, Variable, Parity, Clause, Crossing };
const char* gadget_name(GadgetKind k);

struct Gadget {
  GadgetKind kind;
  std::string label;
  std::vector<int> vertices;
  int parent = -1;  // copy gadgets of the unit tree: gadget index they copy from
};

// Length variable ids: 0 is the unit length; literals and free edges follow.
enum class VarKind { Unit, Positive, Negative, Free, Spacer };
struct LengthVar {
  VarKind kind;
  int index;  // variable for literals, clause for free edges
  std::string name;
};

// Edge extent = sum coeff * var: segment length along its axis (or along either axis for diagonals)
// and arc radius.
using LinearTerms = std::vector<std::pair<Rational, int>>;
struct EdgeLength {
  LinearTerms terms;
};

// sum coeff * var == 0
struct LengthConstraint {
  LinearTerms terms;
  std::string why;
};

struct Reduction {
  CnfFormula formula;
  Model model = Model::Smooth;
  PlanarGraph graph;
  Representation rep;
  std::vector<EdgeLength> lengths;  // per rep edge
  std::vector<LengthVar> vars;
  std::vector<LengthConstraint> constraints;
  std::vector<Gadget> gadgets;
  int root = 0;  // vertex placed at the origin

  int count(GadgetKind k) const;
  int positive_var(int x) const;
  int negative_var(int x) const;
  int free_var(int clause) const;
};

Reduction build_reduction(const CnfFormula& f, Model model);

// Number of crossing gadgets the construction introduces for f.
int expected_crossings(const CnfFormula& f);

struct Realization {
  bool ok = false;
  std::string reason;  // why the assignment was rejected
  Drawing drawing;
  std::vector<Rational> values;  // solved length variables
};

// Literal lengths: 39/20 for true, 21/20 for false (unit length 1).
Realization realize(const Reduction& r, const std::vector<bool>& assignment);
// Fix arbitrary variables by id, solve the rest.
Realization realize_lengths(const Reduction& r, const std::map<int, Rational>& fixed);

// Solve the length constraints by propagation; throws ConstructionError on conflicting equalities.
std::vector<std::optional<Rational>> propagate(const Reduction& r, const std::map<int, Rational>& fixed);

// Place every vertex from the representation and edge extents. Throws ConstructionError if some
// cycle does not close.
Drawing place(const Reduction& r, const std::vector<Rational>& values);

bool clause_feasible(double la, double lb, double lc, double lu);

// Standalone parity gadget: vertical gap of width 3*lu with the two blocks at heights set by
// l(x) = (3*lu - lambda)/2 and l(not x) = (3*lu + lambda)/2.
Drawing parity_gadget_drawing(Model model, const Rational& lu, const Rational& lambda);
bool parity_crossing_free(Model model, const Rational& lu, const Rational& lambda);
// Smallest lambda for which the parity gadget is crossing-free, bracketed by bisection to 1e-9.
double parity_min_gap(Model model, double lu);

}  // namespace smog

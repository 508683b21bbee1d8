#include <cmath>

#include "gadgets.hpp"
#include "smog/families.hpp"

namespace smog {

bool clause_feasible(double la, double lb, double lc, double lu) { return la + lb + lc > 4 * lu; }

Drawing parity_gadget_drawing(Model model, const Rational& lu, const Rational& lambda) {
  detail::Sketch s;
  s.model = model;
  detail::Ports p = detail::emit_parity(s, {0, 1, 2});
  std::vector<Rational> values{lu, (3 * lu - lambda) / 2, (3 * lu + lambda) / 2};
  return detail::draw_sketch(s, detail::place_sketch(s, values, p.in), values);
}

bool parity_crossing_free(Model model, const Rational& lu, const Rational& lambda) {
  Drawing d = parity_gadget_drawing(model, lu, lambda);
  return validate(embed_from_drawing(d), d).planar();
}

double parity_min_gap(Model model, double lu) {
  if (!(lu > 0)) throw std::invalid_argument("unit length must be positive");
  Rational u(lu);
  // Both blocks at the same height always collide; lambda = 2 lu leaves l(x) = lu / 2.
  double lo = 0, hi = 2 * lu;
  if (parity_crossing_free(model, u, Rational(lo)) || !parity_crossing_free(model, u, Rational(hi)))
    throw std::logic_error("parity gadget does not switch between the bisection ends");
  while (hi - lo > 1e-9 * lu) {
    double mid = (lo + hi) / 2;
    if (parity_crossing_free(model, u, Rational(mid)))
      hi = mid;
    else
      lo = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace smog

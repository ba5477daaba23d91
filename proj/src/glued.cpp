#include "kmalg/glued.hpp"

namespace kmalg {

SpaceSpec::SpaceSpec(int contact_order) : m_(contact_order) {
  if (contact_order < 0) throw PreconditionViolation("contact order must be nonnegative");
}

std::string GluedFunction::str() const {
  return "pair m=" + std::to_string(space_.contact_order()) + ": " + f_.str('x') + " | " +
         g_.str('y');
}

GluedFunction make_glued(Poly f, Poly g, SpaceSpec space) {
  for (int n = 0; n <= space.contact_order(); ++n) {
    if (f.coeff(n) != g.coeff(n)) throw JetMismatch(n, f.coeff(n), g.coeff(n));
  }
  return GluedFunction(std::move(f), std::move(g), space);
}

GluedFunction glued_arith(const GluedFunction& u, const GluedFunction& v, GluedOp kind) {
  if (u.space() != v.space()) {
    throw SpaceMismatch(u.space().contact_order(), v.space().contact_order());
  }
  if (kind == GluedOp::kAdd) return make_glued(u.f() + v.f(), u.g() + v.g(), u.space());
  return make_glued(u.f() * v.f(), u.g() * v.g(), u.space());
}

GluedFunction operator+(const GluedFunction& u, const GluedFunction& v) {
  return glued_arith(u, v, GluedOp::kAdd);
}

GluedFunction operator*(const GluedFunction& u, const GluedFunction& v) {
  return glued_arith(u, v, GluedOp::kMul);
}

GluedFunction glued_one(SpaceSpec space) {
  return make_glued(Poly::constant(1), Poly::constant(1), space);
}

Poly default_profile(SpaceSpec space) {
  return Poly::monomial(Rational(1), space.contact_order() + 1);
}

void check_profile(const Poly& h, SpaceSpec space) {
  if (h.valuation() != space.contact_order() + 1) {
    throw PreconditionViolation("profile h = " + h.str() + " must vanish at 0 to exact order " +
                                std::to_string(space.contact_order() + 1));
  }
}

Poly2 extend_to_plane(const GluedFunction& u, const Poly& h) {
  check_profile(h, u.space());
  Poly slope = divide_exact(u.g() - u.f(), h);
  return Poly2({u.f(), slope});
}

GluedFunction restrict_to_branches(const Poly2& F, const Poly& h, SpaceSpec space,
                                   const Limits& limits) {
  check_profile(h, space);
  Poly f = F.at_y_zero();
  Poly g = F.substitute_y(h);
  enforce_cap(g, limits);
  try {
    return make_glued(std::move(f), std::move(g), space);
  } catch (const JetMismatch& e) {
    throw ClosureViolation(std::string("plane restriction left K_m: ") + e.what());
  }
}

}  // namespace kmalg

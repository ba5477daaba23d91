#include "kmalg/symbols.hpp"

namespace kmalg {

namespace {

std::string summarize(const AdmissibilityReport& report) {
  std::string out = "not a valid symbol:";
  for (const auto& v : report.violations) {
    out += " [" + v.constraint + ": " + v.lhs.str() + " vs " + v.rhs.str() + "]";
  }
  return out;
}

void same_space(const SpaceSpec& a, const SpaceSpec& b) {
  if (a != b) throw SpaceMismatch(a.contact_order(), b.contact_order());
}

// Results of operations that are closed on valid inputs.
SymbolElem closed_result(int degree, Poly a, Poly b, SpaceSpec space, const char* what) {
  try {
    return make_symbol(degree, std::move(a), std::move(b), space);
  } catch (const InvalidSymbol& e) {
    throw ClosureViolation(std::string(what) + ": " + e.what());
  }
}

}  // namespace

InvalidSymbol::InvalidSymbol(AdmissibilityReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

std::string SymbolElem::str() const {
  return "symbol deg=" + std::to_string(degree_) + " m=" + std::to_string(space_.contact_order()) +
         ": " + a_.str('x') + " | " + b_.str('y');
}

AdmissibilityReport check_symbol_conditions(int degree, const Poly& a, const Poly& b,
                                            SpaceSpec space) {
  if (degree < 0) throw PreconditionViolation("symbol degree must be nonnegative");
  return evaluate(
      symbol_conditions(space, degree), [&](Side side, int) { return side == Side::kA ? a : b; },
      /*with_index=*/false);
}

AdmissibilityReport check_symbol_conditions(const SymbolElem& s) {
  return check_symbol_conditions(s.degree(), s.a(), s.b(), s.space());
}

SymbolElem make_symbol(int degree, Poly a, Poly b, SpaceSpec space) {
  auto report = check_symbol_conditions(degree, a, b, space);
  if (!report.admissible()) throw InvalidSymbol(std::move(report));
  return SymbolElem(degree, std::move(a), std::move(b), space);
}

SymbolElem zero_symbol(int degree, SpaceSpec space) { return make_symbol(degree, {}, {}, space); }

Poly take_symbol(const BranchOp& op, int k) {
  if (op.order() > k) {
    throw PreconditionViolation("operator of order " + std::to_string(op.order()) +
                                " has no symbol of degree " + std::to_string(k));
  }
  return op.coeff(k);
}

SymbolElem pair_symbol(const PairedOp& op) {
  int k = op.order();
  return closed_result(k, take_symbol(op.d1(), k), take_symbol(op.d2(), k), op.space(),
                       "symbol of an admissible pair");
}

SymbolElem symbol_add(const SymbolElem& s, const SymbolElem& t) {
  same_space(s.space(), t.space());
  if (s.degree() != t.degree()) throw PreconditionViolation("symbols of different degree");
  return closed_result(s.degree(), s.a() + t.a(), s.b() + t.b(), s.space(), "symbol sum");
}

SymbolElem symbol_scale(const Rational& c, const SymbolElem& s) {
  return closed_result(s.degree(), c * s.a(), c * s.b(), s.space(), "scaled symbol");
}

SymbolElem symbol_mul(const SymbolElem& s, const SymbolElem& t, const Limits& limits) {
  same_space(s.space(), t.space());
  Poly a = s.a() * t.a();
  Poly b = s.b() * t.b();
  enforce_cap(a, limits);
  enforce_cap(b, limits);
  return closed_result(s.degree() + t.degree(), std::move(a), std::move(b), s.space(),
                       "symbol product");
}

SymbolElem poisson_bracket(const SymbolElem& s, const SymbolElem& t, const Limits& limits) {
  same_space(s.space(), t.space());
  const int l = s.degree();
  const int n = t.degree();
  if (l + n == 0) return zero_symbol(0, s.space());
  auto branch = [&](const Poly& p, const Poly& q) {
    Poly out = Rational(l) * (p * q.derive()) - Rational(n) * (q * p.derive());
    return enforce_cap(out, limits);
  };
  return closed_result(l + n - 1, branch(s.a(), t.a()), branch(s.b(), t.b()), s.space(),
                       "Poisson bracket");
}

SymbolElem bracket_via_commutator(const PairedOp& opA, const PairedOp& opB,
                                  const Limits& limits) {
  if (opA.order() + opB.order() == 0) {
    same_space(opA.space(), opB.space());
    return zero_symbol(0, opA.space());
  }
  return pair_symbol(pair_commutator(opA, opB, limits));
}

}  // namespace kmalg

#include "kmalg/paired.hpp"

#include <algorithm>

namespace kmalg {

namespace {

std::string summarize(const AdmissibilityReport& report) {
  std::string out = "pair is not admissible:";
  for (const auto& v : report.violations) {
    out += " [" + v.constraint + ": " + v.lhs.str() + " vs " + v.rhs.str() + "]";
  }
  return out;
}

void same_space(const SpaceSpec& a, const SpaceSpec& b) {
  if (a != b) throw SpaceMismatch(a.contact_order(), b.contact_order());
}

}  // namespace

NotAdmissible::NotAdmissible(AdmissibilityReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

PairedOp make_paired(BranchOp d1, BranchOp d2, SpaceSpec space, int k) {
  if (k < 0) throw PreconditionViolation("operator order must be nonnegative");
  auto report = check_admissible(d1, d2, space, k);
  if (!report.admissible()) throw NotAdmissible(std::move(report));
  return PairedOp(std::move(d1), std::move(d2), space, k);
}

PairedOp pair_multiplication(const GluedFunction& u) {
  return make_paired(BranchOp::multiplication(u.f()), BranchOp::multiplication(u.g()), u.space(),
                     0);
}

GluedFunction pair_apply(const PairedOp& op, const GluedFunction& u) {
  same_space(op.space(), u.space());
  Poly f = apply(op.d1(), u.f());
  Poly g = apply(op.d2(), u.g());
  try {
    return make_glued(std::move(f), std::move(g), u.space());
  } catch (const JetMismatch& e) {
    throw ClosureViolation(std::string("admissible operator left A: ") + e.what());
  }
}

PairedOp pair_compose(const PairedOp& opA, const PairedOp& opB, const Limits& limits) {
  same_space(opA.space(), opB.space());
  BranchOp d1 = compose(opA.d1(), opB.d1(), limits);
  BranchOp d2 = compose(opA.d2(), opB.d2(), limits);
  try {
    return make_paired(std::move(d1), std::move(d2), opA.space(), opA.order() + opB.order());
  } catch (const NotAdmissible& e) {
    throw ClosureViolation(std::string("composition of admissible pairs failed: ") + e.what());
  }
}

PairedOp pair_commutator(const PairedOp& opA, const PairedOp& opB, const Limits& limits) {
  same_space(opA.space(), opB.space());
  BranchOp d1 = commutator(opA.d1(), opB.d1(), limits);
  BranchOp d2 = commutator(opA.d2(), opB.d2(), limits);
  int k = std::max(opA.order() + opB.order() - 1, 0);
  try {
    return make_paired(std::move(d1), std::move(d2), opA.space(), k);
  } catch (const Error& e) {
    throw ClosureViolation(std::string("commutator of admissible pairs failed: ") + e.what());
  }
}

}  // namespace kmalg

#pragma once

#include <string>

#include "kmalg/conditions.hpp"
#include "kmalg/paired.hpp"

namespace kmalg {

/// make_symbol rejected a coefficient pair at the requested degree.
class InvalidSymbol : public Error {
 public:
  explicit InvalidSymbol(AdmissibilityReport report);
  const AdmissibilityReport& report() const { return report_; }

 private:
  AdmissibilityReport report_;
};

/// Homogeneous element of Smb(A): the class of an order-k operator modulo
/// order k - 1, represented by its top coefficients (a_k, b_k). The degree
/// is part of the value; the zero symbol keeps its nominal degree.
class SymbolElem {
 public:
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const Poly& a() const { return a_; }
  [[nodiscard]] const Poly& b() const { return b_; }
  [[nodiscard]] const SpaceSpec& space() const { return space_; }
  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  friend bool operator==(const SymbolElem&, const SymbolElem&) = default;

  /// DSL form `symbol deg=<k> m=<m>: <a> | <b>`.
  [[nodiscard]] std::string str() const;

 private:
  friend SymbolElem make_symbol(int degree, Poly a, Poly b, SpaceSpec space);
  SymbolElem(int degree, Poly a, Poly b, SpaceSpec space)
      : degree_(degree), a_(std::move(a)), b_(std::move(b)), space_(space) {}

  int degree_;
  Poly a_;
  Poly b_;
  SpaceSpec space_;
};

/// Membership test for S_k: the jet conditions on (a, b) implied by
/// admissibility once all lower coefficients are eliminated.
AdmissibilityReport check_symbol_conditions(int degree, const Poly& a, const Poly& b,
                                            SpaceSpec space);
AdmissibilityReport check_symbol_conditions(const SymbolElem& s);

/// Throws InvalidSymbol when (a, b) is not a degree-k symbol.
SymbolElem make_symbol(int degree, Poly a, Poly b, SpaceSpec space);

/// The zero symbol of the given degree.
SymbolElem zero_symbol(int degree, SpaceSpec space);

/// a_k. Throws PreconditionViolation when order(op) > k.
Poly take_symbol(const BranchOp& op, int k);

/// ([Delta_1]_k, [Delta_2]_k) at k = op.order().
SymbolElem pair_symbol(const PairedOp& op);

/// Same-degree sum. Throws SpaceMismatch or PreconditionViolation.
SymbolElem symbol_add(const SymbolElem& s, const SymbolElem& t);
SymbolElem symbol_scale(const Rational& c, const SymbolElem& s);

/// Graded product: degrees add, coefficients multiply branchwise.
SymbolElem symbol_mul(const SymbolElem& s, const SymbolElem& t, const Limits& limits = {});

/// {s, t} at degree l + n - 1 with branch formula l a_s a_t' - n a_t a_s'.
/// For l = n = 0 the bracket of two functions vanishes; the zero symbol of
/// degree 0 is returned.
SymbolElem poisson_bracket(const SymbolElem& s, const SymbolElem& t, const Limits& limits = {});

/// The symbol of the componentwise commutator [opA, opB] at degree
/// l + n - 1, computed from the full operators.
SymbolElem bracket_via_commutator(const PairedOp& opA, const PairedOp& opB,
                                  const Limits& limits = {});

}  // namespace kmalg

#pragma once

#include <string>
#include <vector>

#include "kmalg/poly.hpp"

namespace kmalg {

/// Linear differential operator sum_i a_i(x) (d/dx)^i on one branch.
/// coeffs()[i] is a_i; the top coefficient is nonzero, so the zero operator
/// has no coefficients and order kMinusInfinity.
class BranchOp {
 public:
  BranchOp() = default;
  explicit BranchOp(std::vector<Poly> coeffs);

  /// Multiplication by q.
  static BranchOp multiplication(const Poly& q);
  /// (d/dx)^n.
  static BranchOp derivative(int n = 1);
  static BranchOp identity() { return multiplication(Poly::constant(1)); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] int order() const {
    return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] const std::vector<Poly>& coeffs() const { return coeffs_; }
  /// a_i, zero past the order.
  [[nodiscard]] Poly coeff(int i) const;
  /// Largest coefficient degree; kMinusInfinity for the zero operator.
  [[nodiscard]] int coeff_degree() const;

  BranchOp& operator+=(const BranchOp& o);
  BranchOp& operator-=(const BranchOp& o);
  friend BranchOp operator+(BranchOp a, const BranchOp& b) { return a += b; }
  friend BranchOp operator-(BranchOp a, const BranchOp& b) { return a -= b; }
  friend BranchOp operator*(const Rational& c, const BranchOp& op);
  friend bool operator==(const BranchOp&, const BranchOp&) = default;

  /// Human-readable form such as `x*d^2 - d`; `var` names the branch
  /// variable in the coefficients.
  [[nodiscard]] std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Poly> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const BranchOp& op);

/// sum_i a_i p^(i).
Poly apply(const BranchOp& op, const Poly& p);

/// opA o opB via the Leibniz rule d^i b = sum_t C(i, t) b^(t) d^(i-t).
/// Throws DegreeCapExceeded when a coefficient outgrows limits.
BranchOp compose(const BranchOp& opA, const BranchOp& opB, const Limits& limits = {});

/// opA o opB - opB o opA.
BranchOp commutator(const BranchOp& opA, const BranchOp& opB, const Limits& limits = {});

/// delta_a(op) = [op, a], with a acting by multiplication.
BranchOp delta_reduce(const BranchOp& op, const Poly& a, const Limits& limits = {});

/// True iff every chain delta_{x^{n_0}} o ... o delta_{x^{n_k}} kills op,
/// over all multisets of exponents n_j <= probe_degree. k = -1 asks whether
/// op is zero.
bool verify_order(const BranchOp& op, int k, int probe_degree);

}  // namespace kmalg

#pragma once

#include "kmalg/conditions.hpp"
#include "kmalg/diffop.hpp"
#include "kmalg/glued.hpp"

namespace kmalg {

/// make_paired rejected a pair; carries the violated constraints.
class NotAdmissible : public Error {
 public:
  explicit NotAdmissible(AdmissibilityReport report);
  const AdmissibilityReport& report() const { return report_; }

 private:
  AdmissibilityReport report_;
};

/// A differential operator of order <= k on A = C^inf(K_m), given by its
/// two branch components. Only constructible for admissible pairs.
class PairedOp {
 public:
  [[nodiscard]] const BranchOp& d1() const { return d1_; }
  [[nodiscard]] const BranchOp& d2() const { return d2_; }
  [[nodiscard]] const SpaceSpec& space() const { return space_; }
  [[nodiscard]] int order() const { return order_; }

  friend bool operator==(const PairedOp&, const PairedOp&) = default;

 private:
  friend PairedOp make_paired(BranchOp d1, BranchOp d2, SpaceSpec space, int k);
  PairedOp(BranchOp d1, BranchOp d2, SpaceSpec space, int k)
      : d1_(std::move(d1)), d2_(std::move(d2)), space_(space), order_(k) {}

  BranchOp d1_;
  BranchOp d2_;
  SpaceSpec space_;
  int order_;
};

/// Throws NotAdmissible, or PreconditionViolation if a branch order exceeds k.
PairedOp make_paired(BranchOp d1, BranchOp d2, SpaceSpec space, int k);

/// Multiplication by the glued function u, an operator of order 0.
PairedOp pair_multiplication(const GluedFunction& u);

/// (Delta_1 f, Delta_2 g). Throws SpaceMismatch.
GluedFunction pair_apply(const PairedOp& op, const GluedFunction& u);

/// Componentwise composition at order kA + kB. Throws SpaceMismatch, and
/// ClosureViolation if the result fails its admissibility check.
PairedOp pair_compose(const PairedOp& opA, const PairedOp& opB, const Limits& limits = {});

/// Componentwise commutator at order max(kA + kB - 1, 0).
PairedOp pair_commutator(const PairedOp& opA, const PairedOp& opB, const Limits& limits = {});

}  // namespace kmalg

#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmalg/diffop.hpp"
#include "kmalg/glued.hpp"

namespace kmalg {

/// Which branch a coefficient belongs to: a_s on branch 1, b_s on branch 2.
enum class Side { kA, kB };

/// The unknown a_s^(r)(0) (or b_s^(r)(0)): r-th derivative at 0 of the
/// coefficient of (d/dx)^s.
struct JetVar {
  Side side;
  int index;  // s
  int deriv;  // r

  friend bool operator==(const JetVar&, const JetVar&) = default;
};

/// `a2'(0)`, `b1(0)`, `a0^(3)(0)`. With `with_index` false the index is
/// dropped (`a'(0)`), which is how symbol conditions read.
std::string render(const JetVar& v, bool with_index = true);

/// Canonical column order used for every reduction: higher index first,
/// then higher derivative, then the b-side before the a-side. With this
/// order the reduced system expresses b-jets through a-jets.
bool column_before(const JetVar& lhs, const JetVar& rhs);

/// All unknowns {a_s^(r)(0), b_s^(r)(0) : s <= k, r <= m} in column order.
std::vector<JetVar> operator_unknowns(int m, int k);

/// One reduced linear equation sum_v coeff_v * v = 0. The first term is the
/// pivot and has coefficient 1.
struct Constraint {
  std::vector<std::pair<JetVar, Rational>> terms;

  /// `a1(0) = b1(0)`, `a2'(0) + a1(0) = 0`. Two-term rows with opposite
  /// coefficients are rendered as an equality, a-side on the left.
  [[nodiscard]] std::string text(bool with_index = true) const;

  /// Left and right hand side values of text() under an assignment.
  [[nodiscard]] std::pair<Rational, Rational> sides(
      const std::function<Rational(const JetVar&)>& value) const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// A homogeneous linear system in jet unknowns, held in reduced row-echelon
/// form over the rationals with respect to the column order above.
class ConditionSet {
 public:
  /// Reduces `rows` (each of length columns.size()). Columns must already
  /// be in canonical order.
  ConditionSet(std::vector<JetVar> columns, std::vector<std::vector<Rational>> rows);

  [[nodiscard]] const std::vector<JetVar>& columns() const { return columns_; }
  [[nodiscard]] const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  [[nodiscard]] size_t rank() const { return rows_.size(); }

  /// Rows in reading order: pivot with lower index first, a before b.
  [[nodiscard]] std::vector<Constraint> constraints() const;
  [[nodiscard]] std::vector<std::string> lines(bool with_index = true) const;

  /// Basis of the solution space, one vector per free column.
  [[nodiscard]] std::vector<std::vector<Rational>> solution_basis() const;

  /// Constraints implied on the columns satisfying `keep` once every other
  /// column is eliminated.
  [[nodiscard]] ConditionSet project(const std::function<bool(const JetVar&)>& keep) const;

  friend bool operator==(const ConditionSet&, const ConditionSet&) = default;

 private:
  std::vector<JetVar> columns_;
  std::vector<std::vector<Rational>> rows_;
};

/// Reduced system on the coefficient jets of (Delta_1, Delta_2) of order
/// <= k equivalent to: (Delta_1 f)^(i)(0) = (Delta_2 g)^(i)(0), i <= m, for
/// every (f, g) in A. Rows come from expanding each derivative at 0 by the
/// Leibniz rule on the spanning family. Results are memoized per (m, k).
ConditionSet generate_conditions(SpaceSpec space, int k);

/// Conditions on the jets of the top coefficient pair (a_k, b_k) of an
/// admissible operator of order <= k, i.e. the membership test for S_k.
ConditionSet symbol_conditions(SpaceSpec space, int degree);

/// Pairs of A spanning every pair of polynomials of degree <= max_degree
/// with matching m-jets: (x^n, x^n), then (x^e, 0) and (0, y^e) for e > m.
std::vector<GluedFunction> spanning_family(SpaceSpec space, int max_degree);

struct Violation {
  std::string constraint;
  Rational lhs;
  Rational rhs;
};

struct AdmissibilityReport {
  std::vector<Violation> violations;
  [[nodiscard]] bool admissible() const { return violations.empty(); }
};

/// Evaluates generate_conditions(space, k) on the jets of d1, d2. Throws
/// PreconditionViolation when a branch order exceeds k.
AdmissibilityReport check_admissible(const BranchOp& d1, const BranchOp& d2, SpaceSpec space,
                                     int k);

/// Default probe depth k + m + 2.
int default_probe_depth(SpaceSpec space, int k);

/// Brute force: applies both operators to every member of the spanning
/// family up to probe_degree and compares m-jets of the outputs.
bool probe_admissible(const BranchOp& d1, const BranchOp& d2, SpaceSpec space, int probe_degree);

/// Evaluates a condition set on explicit coefficient polynomials. For
/// operator systems `a[s]` / `b[s]` are the coefficients; for symbol systems
/// pass the single top coefficient at position `degree`.
AdmissibilityReport evaluate(const ConditionSet& conditions,
                             const std::function<Poly(Side, int)>& coefficient,
                             bool with_index = true);

/// Reads equations in the rendered notation, one chain per line:
///   a0(0) = b0(0)
///   a2(0) = 0 = b2(0)
///   a2'(0) + a1(0) = 0
/// Variables without an index (`a'(0)`) take `default_index`. `#` starts a
/// comment. The result is reduced over `columns`. Throws
/// std::invalid_argument with a line number on malformed text.
ConditionSet parse_conditions(std::string_view text, std::vector<JetVar> columns,
                              std::optional<int> default_index = std::nullopt);

}  // namespace kmalg

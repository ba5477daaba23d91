#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kmalg/glued.hpp"
#include "kmalg/symbols.hpp"

namespace kmalg {

enum class Branch { kOne, kTwo, kSingular };

/// Evaluation character of A at a point of K_m. Evaluation at the origin of
/// either branch is the same point and normalizes to kSingular.
class Character {
 public:
  static Character at(Branch branch, const Rational& base_point);
  static Character singular() { return at(Branch::kSingular, Rational(0)); }

  [[nodiscard]] Branch branch() const { return branch_; }
  [[nodiscard]] const Rational& base_point() const { return base_point_; }

  friend bool operator==(const Character&, const Character&) = default;

  /// DSL form `char branch=<1|2|sing> at=<rational>`.
  [[nodiscard]] std::string str() const;

 private:
  Character(Branch b, Rational t) : branch_(b), base_point_(std::move(t)) {}
  Branch branch_;
  Rational base_point_;
};

Rational char_eval(const Character& c, const GluedFunction& u);

/// Linear functional on A, e.g. a candidate character.
using Functional = std::function<Rational(const GluedFunction&)>;

/// Probes unitality, additivity and multiplicativity of `h` on `samples`
/// random pairs drawn from A. Returns false at the first counterexample.
bool is_homomorphism(const Functional& h, SpaceSpec space, int samples, std::uint64_t seed = 1);

bool char_is_homomorphism(const Character& c, SpaceSpec space, int samples,
                          std::uint64_t seed = 1);

/// First element of the spanning family up to max_degree on which c1 and c2
/// differ; nullopt when they agree on all of them.
std::optional<GluedFunction> separating_witness(const Character& c1, const Character& c2,
                                                SpaceSpec space, int max_degree);

struct IdealFactorization {
  SymbolElem g;  // (x, y) in degree 0, vanishing at the singular point
  SymbolElem t;  // degree 2k
};

/// On K_0, for s = (x alpha, y beta) of degree k >= 1: s * s = g * t with
/// g = (x, y) and t = (x alpha^2, y beta^2). Throws PreconditionViolation
/// off K_0 or at degree 0.
IdealFactorization maximal_ideal_factor(const SymbolElem& s);

struct IdentityCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct NullityReport {
  SpaceSpec space;
  std::vector<IdentityCheck> identities;
  std::vector<std::string> notes;
  [[nodiscard]] bool all_passed() const;
};

/// Exact graded-algebra identities forcing every character of Smb(A) that
/// extends evaluation at the singular point to vanish in positive degree.
/// Supported for m = 0 and m = 1; throws PreconditionViolation otherwise.
NullityReport nullity_identity_check(SpaceSpec space);

}  // namespace kmalg

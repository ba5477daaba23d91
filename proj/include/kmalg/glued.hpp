#pragma once

#include <string>

#include "kmalg/poly.hpp"
#include "kmalg/poly2.hpp"

namespace kmalg {

/// Two lines glued at the origin with contact of order m. m = 0 is the
/// coordinate cross xy = 0.
class SpaceSpec {
 public:
  explicit SpaceSpec(int contact_order);

  [[nodiscard]] int contact_order() const { return m_; }
  [[nodiscard]] std::string name() const { return "K" + std::to_string(m_); }

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

 private:
  int m_;
};

/// A function on K_m: a pair (f, g) of branch polynomials whose m-jets at 0
/// agree. Branch 1 uses the variable x, branch 2 the variable y; both are
/// plain Poly values.
class GluedFunction {
 public:
  [[nodiscard]] const Poly& f() const { return f_; }
  [[nodiscard]] const Poly& g() const { return g_; }
  [[nodiscard]] const SpaceSpec& space() const { return space_; }

  /// Common m-jet at the glued point.
  [[nodiscard]] Jet jet() const { return jet_project(f_, space_.contact_order()); }

  friend bool operator==(const GluedFunction&, const GluedFunction&) = default;

  /// DSL form `pair m=<m>: <f> | <g>`.
  [[nodiscard]] std::string str() const;

 private:
  friend GluedFunction make_glued(Poly f, Poly g, SpaceSpec space);
  GluedFunction(Poly f, Poly g, SpaceSpec space)
      : f_(std::move(f)), g_(std::move(g)), space_(space) {}

  Poly f_;
  Poly g_;
  SpaceSpec space_;
};

/// Throws JetMismatch with the first index n <= m where the jets differ.
GluedFunction make_glued(Poly f, Poly g, SpaceSpec space);

enum class GluedOp { kAdd, kMul };

/// Componentwise ring operations. Throws SpaceMismatch.
GluedFunction glued_arith(const GluedFunction& u, const GluedFunction& v, GluedOp kind);
GluedFunction operator+(const GluedFunction& u, const GluedFunction& v);
GluedFunction operator*(const GluedFunction& u, const GluedFunction& v);

/// Unit (1, 1).
GluedFunction glued_one(SpaceSpec space);

/// Embedding profile x^{m+1}: K_m is y (y - h(x)) = 0 in the plane.
Poly default_profile(SpaceSpec space);

/// Checks that h vanishes at 0 to exact order m + 1; throws
/// PreconditionViolation otherwise.
void check_profile(const Poly& h, SpaceSpec space);

/// F(x, y) = f(x) + y (g(x) - f(x)) / h(x), so that F(x, 0) = f and
/// F(x, h(x)) = g. Throws InexactDivision when h does not divide g - f.
Poly2 extend_to_plane(const GluedFunction& u, const Poly& h);

/// (F(x, 0), F(x, h(x))). The result always has matching m-jets since the
/// two restrictions differ by a multiple of h.
GluedFunction restrict_to_branches(const Poly2& F, const Poly& h, SpaceSpec space,
                                   const Limits& limits = {});

}  // namespace kmalg

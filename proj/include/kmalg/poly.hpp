#pragma once

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kmalg/errors.hpp"
#include "kmalg/rational.hpp"

namespace kmalg {

/// Degree reported by the zero polynomial (and order of the zero operator).
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

class Jet;

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of x^i; the top coefficient is never zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int exponent);
  static Poly x() { return monomial(Rational(1), 1); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// kMinusInfinity for the zero polynomial.
  [[nodiscard]] int degree() const {
    return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  [[nodiscard]] Rational coeff(int i) const;
  /// p^(r)(0) = r! * coeff(r).
  [[nodiscard]] Rational derivative_at_zero(int r) const;
  /// Order of vanishing at 0; kMinusInfinity for zero.
  [[nodiscard]] int valuation() const;

  [[nodiscard]] Poly derive() const;
  [[nodiscard]] Poly derive(int times) const;
  [[nodiscard]] Rational eval(const Rational& t) const;
  /// p(q(x)).
  [[nodiscard]] Poly substitute(const Poly& q) const;
  /// x^r * p.
  [[nodiscard]] Poly shift(int r) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Renders in the DSL syntax, e.g. `3/2*x^2 - x + 1`.
  [[nodiscard]] std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Throws DegreeCapExceeded when deg p > limits.max_degree.
const Poly& enforce_cap(const Poly& p, const Limits& limits);

enum class PolyOp { kAdd, kSub, kMul };
Poly poly_arith(const Poly& p, const Poly& q, PolyOp kind);

struct HadamardSplit {
  Poly head;  // degree < r
  Poly tail;
};

/// p = head + x^r * tail.
HadamardSplit hadamard_split(const Poly& p, int r);

/// Quotient and remainder of long division; q must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);

/// r with r*q == p. Throws InexactDivision carrying the remainder, or
/// PreconditionViolation when q is zero.
Poly divide_exact(const Poly& p, const Poly& q);

/// Truncated Taylor data at 0: values()[n] = f^(n)(0) / n!, n = 0..order.
/// This is the image of a polynomial in R[eps]/(eps^{order+1}).
class Jet {
 public:
  Jet(int order, std::vector<Rational> values);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] std::span<const Rational> values() const { return values_; }
  [[nodiscard]] const Rational& operator[](int n) const { return values_[static_cast<size_t>(n)]; }

  /// Basis element eps^n of the truncated ring.
  static Jet epsilon_power(int order, int n);

  friend Jet operator+(const Jet& a, const Jet& b);
  /// Product in R[eps]/(eps^{order+1}).
  friend Jet operator*(const Jet& a, const Jet& b);
  friend bool operator==(const Jet&, const Jet&) = default;

 private:
  int order_;
  std::vector<Rational> values_;
};

Jet jet_project(const Poly& p, int m);

}  // namespace kmalg

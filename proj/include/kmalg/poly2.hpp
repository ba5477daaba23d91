#pragma once

#include <string>
#include <vector>

#include "kmalg/poly.hpp"

namespace kmalg {

/// Bivariate polynomial in x, y. coeff(i, j) multiplies x^i y^j. Stored as
/// one univariate polynomial in x per power of y, trailing zero rows trimmed.
class Poly2 {
 public:
  Poly2() = default;
  /// rows[j] is the coefficient of y^j.
  explicit Poly2(std::vector<Poly> y_rows);

  static Poly2 from_x(const Poly& p) { return Poly2({p}); }
  static Poly2 monomial(const Rational& c, int i, int j);

  [[nodiscard]] bool is_zero() const { return rows_.empty(); }
  [[nodiscard]] int y_degree() const;
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] const std::vector<Poly>& y_rows() const { return rows_; }
  /// Coefficient polynomial of y^j.
  [[nodiscard]] Poly y_coeff(int j) const;
  [[nodiscard]] Rational coeff(int i, int j) const { return y_coeff(j).coeff(i); }

  /// F(x, 0).
  [[nodiscard]] Poly at_y_zero() const { return y_coeff(0); }
  /// F(x, h(x)).
  [[nodiscard]] Poly substitute_y(const Poly& h) const;

  Poly2& operator+=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2&, const Poly2&) = default;

  /// DSL rendering, e.g. `x*y + 3/2*x^2*y^2 - 1`.
  [[nodiscard]] std::string str() const;

 private:
  void trim();
  std::vector<Poly> rows_;
};

std::ostream& operator<<(std::ostream& os, const Poly2& p);

}  // namespace kmalg

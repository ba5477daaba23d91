#include "kmalg/poly2.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace kmalg {

Poly2::Poly2(std::vector<Poly> y_rows) : rows_(std::move(y_rows)) { trim(); }

void Poly2::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

Poly2 Poly2::monomial(const Rational& c, int i, int j) {
  std::vector<Poly> rows(static_cast<size_t>(j) + 1);
  rows.back() = Poly::monomial(c, i);
  return Poly2(std::move(rows));
}

int Poly2::y_degree() const {
  return rows_.empty() ? kMinusInfinity : static_cast<int>(rows_.size()) - 1;
}

int Poly2::total_degree() const {
  int out = kMinusInfinity;
  for (size_t j = 0; j < rows_.size(); ++j) {
    if (!rows_[j].is_zero()) out = std::max(out, rows_[j].degree() + static_cast<int>(j));
  }
  return out;
}

Poly Poly2::y_coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(rows_.size())) return {};
  return rows_[static_cast<size_t>(j)];
}

Poly Poly2::substitute_y(const Poly& h) const {
  Poly acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * h + *it;
  return acc;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (size_t j = 0; j < o.rows_.size(); ++j) rows_[j] += o.rows_[j];
  trim();
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Poly> out(a.rows_.size() + b.rows_.size() - 1);
  for (size_t i = 0; i < a.rows_.size(); ++i) {
    for (size_t j = 0; j < b.rows_.size(); ++j) out[i + j] += a.rows_[i] * b.rows_[j];
  }
  return Poly2(std::move(out));
}

std::string Poly2::str() const {
  if (is_zero()) return "0";
  // Highest total degree first, then higher power of x.
  struct Term {
    int i, j;
    Rational c;
  };
  std::vector<Term> terms;
  for (size_t j = 0; j < rows_.size(); ++j) {
    auto cs = rows_[j].coeffs();
    for (size_t i = 0; i < cs.size(); ++i) {
      if (!cs[i].is_zero()) terms.push_back({static_cast<int>(i), static_cast<int>(j), cs[i]});
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.i + a.j != b.i + b.j) return a.i + a.j > b.i + b.j;
    return a.i > b.i;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational mag = t.c.abs();
    if (first) {
      if (t.c.sign() < 0) os << '-';
    } else {
      os << (t.c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!mag.is_one() || (t.i == 0 && t.j == 0)) {
      os << mag;
      wrote = true;
    }
    auto var = [&](char v, int e) {
      if (e == 0) return;
      if (wrote) os << '*';
      os << v;
      if (e > 1) os << '^' << e;
      wrote = true;
    };
    var('x', t.i);
    var('y', t.j);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << p.str(); }

}  // namespace kmalg

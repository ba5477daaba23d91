#include "kmalg/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace kmalg {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int exponent) {
  if (exponent < 0) throw PreconditionViolation("negative exponent in monomial");
  std::vector<Rational> v(static_cast<size_t>(exponent) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rational Poly::derivative_at_zero(int r) const { return factorial(r) * coeff(r); }

int Poly::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  }
  return kMinusInfinity;
}

Poly Poly::derive() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  }
  return Poly(std::move(out));
}

Poly Poly::derive(int times) const {
  Poly out = *this;
  for (int t = 0; t < times && !out.is_zero(); ++t) out = out.derive();
  return out;
}

Rational Poly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Poly Poly::substitute(const Poly& q) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q + Poly::constant(*it);
  }
  return acc;
}

Poly Poly::shift(int r) const {
  if (is_zero() || r == 0) return *this;
  std::vector<Rational> out(static_cast<size_t>(r));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Poly operator-(const Poly& a) { return a * Rational(-1); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::string Poly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

const Poly& enforce_cap(const Poly& p, const Limits& limits) {
  if (p.degree() > limits.max_degree) throw DegreeCapExceeded(p.degree(), limits.max_degree);
  return p;
}

Poly poly_arith(const Poly& p, const Poly& q, PolyOp kind) {
  switch (kind) {
    case PolyOp::kAdd:
      return p + q;
    case PolyOp::kSub:
      return p - q;
    case PolyOp::kMul:
      return p * q;
  }
  throw PreconditionViolation("unknown polynomial operation");
}

HadamardSplit hadamard_split(const Poly& p, int r) {
  if (r < 0) throw PreconditionViolation("hadamard_split needs r >= 0");
  auto c = p.coeffs();
  size_t cut = std::min(c.size(), static_cast<size_t>(r));
  Poly head(std::vector<Rational>(c.begin(), c.begin() + static_cast<long>(cut)));
  Poly tail(std::vector<Rational>(c.begin() + static_cast<long>(cut), c.end()));
  return {std::move(head), std::move(tail)};
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw PreconditionViolation("division by the zero polynomial");
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  int dq = q.degree();
  int dp = p.degree();
  if (dp < dq) return {Poly(), p};
  std::vector<Rational> quot(static_cast<size_t>(dp - dq) + 1);
  const Rational& lead = q.coeffs().back();
  for (int i = dp; i >= dq; --i) {
    Rational c = rem[static_cast<size_t>(i)] / lead;
    if (c.is_zero()) continue;
    quot[static_cast<size_t>(i - dq)] = c;
    for (int j = 0; j <= dq; ++j) {
      rem[static_cast<size_t>(i - dq + j)] -= c * q.coeffs()[static_cast<size_t>(j)];
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly divide_exact(const Poly& p, const Poly& q) {
  auto [quot, rem] = divmod(p, q);
  if (!rem.is_zero()) throw InexactDivision(rem.str());
  return quot;
}

Jet::Jet(int order, std::vector<Rational> values) : order_(order), values_(std::move(values)) {
  if (order < 0) throw PreconditionViolation("jet order must be nonnegative");
  if (values_.size() != static_cast<size_t>(order) + 1) {
    throw PreconditionViolation("jet of order " + std::to_string(order) + " needs " +
                                std::to_string(order + 1) + " values");
  }
}

Jet Jet::epsilon_power(int order, int n) {
  std::vector<Rational> v(static_cast<size_t>(order) + 1);
  if (n >= 0 && n <= order) v[static_cast<size_t>(n)] = Rational(1);
  return Jet(order, std::move(v));
}

Jet operator+(const Jet& a, const Jet& b) {
  if (a.order_ != b.order_) throw PreconditionViolation("jet orders differ");
  std::vector<Rational> v(a.values_);
  for (size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
  return Jet(a.order_, std::move(v));
}

Jet operator*(const Jet& a, const Jet& b) {
  if (a.order_ != b.order_) throw PreconditionViolation("jet orders differ");
  std::vector<Rational> v(a.values_.size());
  for (int i = 0; i <= a.order_; ++i) {
    for (int j = 0; i + j <= a.order_; ++j) {
      v[static_cast<size_t>(i + j)] += a.values_[static_cast<size_t>(i)] * b.values_[static_cast<size_t>(j)];
    }
  }
  return Jet(a.order_, std::move(v));
}

Jet jet_project(const Poly& p, int m) {
  if (m < 0) throw PreconditionViolation("jet order must be nonnegative");
  std::vector<Rational> v(static_cast<size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) v[static_cast<size_t>(n)] = p.coeff(n);
  return Jet(m, std::move(v));
}

}  // namespace kmalg

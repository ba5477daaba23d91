#include "kmalg/diffop.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

namespace kmalg {

BranchOp::BranchOp(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void BranchOp::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BranchOp BranchOp::multiplication(const Poly& q) { return BranchOp({q}); }

BranchOp BranchOp::derivative(int n) {
  if (n < 0) throw PreconditionViolation("negative derivative order");
  std::vector<Poly> c(static_cast<size_t>(n) + 1);
  c.back() = Poly::constant(1);
  return BranchOp(std::move(c));
}

Poly BranchOp::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<size_t>(i)];
}

int BranchOp::coeff_degree() const {
  int out = kMinusInfinity;
  for (const auto& c : coeffs_) out = std::max(out, c.degree());
  return out;
}

BranchOp& BranchOp::operator+=(const BranchOp& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

BranchOp& BranchOp::operator-=(const BranchOp& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

BranchOp operator*(const Rational& c, const BranchOp& op) {
  std::vector<Poly> out;
  out.reserve(op.coeffs_.size());
  for (const auto& a : op.coeffs_) out.push_back(c * a);
  return BranchOp(std::move(out));
}

std::string BranchOp::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = order(); i >= 0; --i) {
    const Poly& a = coeffs_[static_cast<size_t>(i)];
    if (a.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string d = i == 0 ? "" : (i == 1 ? "d" : "d^" + std::to_string(i));
    if (d.empty()) {
      os << a.str(var);
    } else if (a == Poly::constant(1)) {
      os << d;
    } else if (a.coeffs().size() == 1 || a.valuation() == a.degree()) {
      os << a.str(var) << '*' << d;
    } else {
      os << '(' << a.str(var) << ")*" << d;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BranchOp& op) { return os << op.str(); }

Poly apply(const BranchOp& op, const Poly& p) {
  Poly out;
  Poly deriv = p;
  for (int i = 0; i <= op.order() && !deriv.is_zero(); ++i) {
    out += op.coeff(i) * deriv;
    deriv = deriv.derive();
  }
  return out;
}

BranchOp compose(const BranchOp& opA, const BranchOp& opB, const Limits& limits) {
  if (opA.is_zero() || opB.is_zero()) return {};
  std::vector<Poly> out(static_cast<size_t>(opA.order() + opB.order()) + 1);
  for (int j = 0; j <= opB.order(); ++j) {
    // Derivatives of b_j, computed once per j.
    std::vector<Poly> bder{opB.coeff(j)};
    for (int t = 1; t <= opA.order(); ++t) bder.push_back(bder.back().derive());
    for (int i = 0; i <= opA.order(); ++i) {
      const Poly a = opA.coeff(i);
      if (a.is_zero()) continue;
      for (int t = 0; t <= i; ++t) {
        const Poly& bt = bder[static_cast<size_t>(t)];
        if (bt.is_zero()) break;
        out[static_cast<size_t>(i + j - t)] += binomial(i, t) * (a * bt);
      }
    }
  }
  for (const auto& c : out) enforce_cap(c, limits);
  return BranchOp(std::move(out));
}

BranchOp commutator(const BranchOp& opA, const BranchOp& opB, const Limits& limits) {
  return compose(opA, opB, limits) - compose(opB, opA, limits);
}

BranchOp delta_reduce(const BranchOp& op, const Poly& a, const Limits& limits) {
  return commutator(op, BranchOp::multiplication(a), limits);
}

bool verify_order(const BranchOp& op, int k, int probe_degree) {
  if (k < 0) return op.is_zero();
  Limits unbounded{std::numeric_limits<int>::max()};
  // Chains commute, so nondecreasing exponent sequences cover every multiset.
  std::function<bool(const BranchOp&, int, int)> walk = [&](const BranchOp& cur, int depth,
                                                            int min_exp) {
    if (cur.is_zero()) return true;
    if (depth == k + 1) return false;
    for (int n = min_exp; n <= probe_degree; ++n) {
      BranchOp next = delta_reduce(cur, Poly::monomial(Rational(1), n), unbounded);
      if (!walk(next, depth + 1, n)) return false;
    }
    return true;
  };
  return walk(op, 0, 0);
}

}  // namespace kmalg

#include "oracles.hpp"

#include "kmalg/paired.hpp"

namespace kmalg::testing {

Matrix rref(Matrix rows) {
  if (rows.empty()) return rows;
  const size_t cols = rows.front().size();
  size_t lead = 0;
  for (size_t c = 0; c < cols && lead < rows.size(); ++c) {
    size_t p = lead;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[lead], rows[p]);
    Rational inv = Rational(1) / rows[lead][c];
    for (auto& e : rows[lead]) e = e * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c].is_zero()) continue;
      Rational f = rows[r][c];
      for (size_t j = 0; j < cols; ++j) rows[r][j] = rows[r][j] - f * rows[lead][j];
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

namespace {

Rational falling(int n, int s) {
  Rational out(1);
  for (int t = 0; t < s; ++t) out = out * Rational(n - t);
  return out;
}

Rational fact(int n) { return falling(n, n); }

std::vector<std::pair<Poly, Poly>> test_pairs(int m, int depth) {
  std::vector<std::pair<Poly, Poly>> out;
  for (int n = 0; n <= depth; ++n) {
    Poly mono = Poly::monomial(Rational(1), n);
    out.emplace_back(mono, mono);
  }
  for (int n = m + 1; n <= depth; ++n) {
    Poly mono = Poly::monomial(Rational(1), n);
    out.emplace_back(mono, Poly());
    out.emplace_back(Poly(), mono);
  }
  return out;
}

}  // namespace

Rational jet_of_image(const BranchOp& op, const Poly& f, int i) {
  Rational total(0);
  for (int s = 0; s <= op.order(); ++s) {
    Poly a = op.coeff(s);
    for (int r = 0; r <= std::min(a.degree(), i); ++r) {
      int n = i - r + s;
      if (n < s || n > f.degree()) continue;
      total = total + a.coeff(r) * f.coeff(n) * falling(n, s);
    }
  }
  return total * fact(i);
}

Matrix conditions_oracle(SpaceSpec space, int k) {
  const int m = space.contact_order();
  const auto columns = operator_unknowns(m, k);
  std::vector<BranchOp> units;
  for (const auto& c : columns) {
    std::vector<Poly> coeffs(static_cast<size_t>(c.index) + 1);
    coeffs[static_cast<size_t>(c.index)] = Poly::monomial(Rational(1) / fact(c.deriv), c.deriv);
    units.emplace_back(std::move(coeffs));
  }
  Matrix rows;
  for (const auto& [f, g] : test_pairs(m, k + m + 2)) {
    for (int i = 0; i <= m; ++i) {
      std::vector<Rational> row;
      for (size_t j = 0; j < columns.size(); ++j) {
        row.push_back(columns[j].side == Side::kA ? jet_of_image(units[j], f, i)
                                                  : -jet_of_image(units[j], g, i));
      }
      rows.push_back(std::move(row));
    }
  }
  return rref(std::move(rows));
}

bool probe_oracle(const BranchOp& d1, const BranchOp& d2, SpaceSpec space, int depth) {
  const int m = space.contact_order();
  for (const auto& [f, g] : test_pairs(m, depth)) {
    for (int i = 0; i <= m; ++i) {
      if (jet_of_image(d1, f, i) != jet_of_image(d2, g, i)) return false;
    }
  }
  return true;
}

BranchOp random_op(rnd::Engine& rng, int k, int coeff_degree) {
  std::vector<Poly> coeffs;
  for (int s = 0; s <= k; ++s) coeffs.push_back(rnd::poly(rng, coeff_degree));
  return BranchOp(std::move(coeffs));
}

namespace {

std::vector<Rational> random_combination(rnd::Engine& rng,
                                         const std::vector<std::vector<Rational>>& basis,
                                         size_t width) {
  std::vector<Rational> v(width);
  std::bernoulli_distribution skip(0.25);
  for (const auto& b : basis) {
    if (skip(rng)) continue;
    Rational c = rnd::rational(rng, 3, 2);
    for (size_t j = 0; j < width; ++j) v[j] = v[j] + c * b[j];
  }
  return v;
}

// Coefficients determined by jets `v` over `columns`, padded with o(x^m) noise.
std::vector<Poly> build_coeffs(rnd::Engine& rng, const std::vector<JetVar>& columns,
                               const std::vector<Rational>& v, Side side, int k, int m,
                               int coeff_degree) {
  std::vector<Poly> coeffs(static_cast<size_t>(k) + 1);
  for (size_t j = 0; j < columns.size(); ++j) {
    const auto& c = columns[j];
    if (c.side != side || v[j].is_zero()) continue;
    coeffs[static_cast<size_t>(c.index)] += Poly::monomial(v[j] / fact(c.deriv), c.deriv);
  }
  for (auto& a : coeffs) a += rnd::poly(rng, coeff_degree - m - 1).shift(m + 1);
  return coeffs;
}

}  // namespace

OpPair admissible_pair(rnd::Engine& rng, SpaceSpec space, int k, int coeff_degree) {
  const int m = space.contact_order();
  ConditionSet cs = generate_conditions(space, k);
  auto v = random_combination(rng, cs.solution_basis(), cs.columns().size());
  return {BranchOp(build_coeffs(rng, cs.columns(), v, Side::kA, k, m, coeff_degree)),
          BranchOp(build_coeffs(rng, cs.columns(), v, Side::kB, k, m, coeff_degree))};
}

OpPair mixed_pair(rnd::Engine& rng, SpaceSpec space, int k, int coeff_degree) {
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0:
      return admissible_pair(rng, space, k, coeff_degree);
    case 1: {
      OpPair p = admissible_pair(rng, space, k, coeff_degree);
      const int m = space.contact_order();
      std::uniform_int_distribution<int> s(0, k);
      std::uniform_int_distribution<int> r(0, m);
      std::bernoulli_distribution side(0.5);
      Rational c = rnd::rational(rng, 3, 2);
      if (c.is_zero()) c = Rational(1);
      std::vector<Poly> bump(static_cast<size_t>(k) + 1);
      bump[static_cast<size_t>(s(rng))] = Poly::monomial(c, r(rng));
      (side(rng) ? p.d1 : p.d2) += BranchOp(std::move(bump));
      return p;
    }
    default:
      return {random_op(rng, k, coeff_degree), random_op(rng, k, coeff_degree)};
  }
}

SymbolElem random_symbol(rnd::Engine& rng, SpaceSpec space, int degree, int poly_degree) {
  const int m = space.contact_order();
  ConditionSet cs = symbol_conditions(space, degree);
  auto v = random_combination(rng, cs.solution_basis(), cs.columns().size());
  Poly a = rnd::poly(rng, poly_degree - m - 1).shift(m + 1);
  Poly b = rnd::poly(rng, poly_degree - m - 1).shift(m + 1);
  for (size_t j = 0; j < cs.columns().size(); ++j) {
    const auto& c = cs.columns()[j];
    (c.side == Side::kA ? a : b) += Poly::monomial(v[j] / fact(c.deriv), c.deriv);
  }
  return make_symbol(degree, std::move(a), std::move(b), space);
}

PairedOp random_paired(rnd::Engine& rng, SpaceSpec space, int k, int coeff_degree) {
  OpPair p = admissible_pair(rng, space, k, coeff_degree);
  return make_paired(std::move(p.d1), std::move(p.d2), space, k);
}

}  // namespace kmalg::testing

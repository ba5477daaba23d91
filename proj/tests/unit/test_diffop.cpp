#include <doctest.h>

#include "kmalg/conditions.hpp"
#include "kmalg/diffop.hpp"
#include "kmalg/paired.hpp"
#include "oracles.hpp"

using namespace kmalg;
using kmalg::testing::conditions_oracle;

namespace {

const SpaceSpec K0(0), K1(1), K2(2);
const Poly x = Poly::x();

BranchOp op(std::vector<Poly> c) { return BranchOp(std::move(c)); }

// Applies both sides to x^n, n <= 6, via sequential application.
bool agrees_on_monomials(const BranchOp& composed, const BranchOp& a, const BranchOp& b) {
  for (int n = 0; n <= 6; ++n) {
    Poly p = Poly::monomial(1, n);
    if (apply(composed, p) != apply(a, apply(b, p))) return false;
  }
  return true;
}

const BranchOp d = BranchOp::derivative();
const BranchOp xd = op({Poly(), x});

}  // namespace

TEST_CASE("apply") {
  CHECK(apply(xd, Poly{0, 0, 0, 1}) == Poly{0, 0, 0, 3});
  CHECK(apply(op({Poly{1}, Poly(), Poly{1}}), Poly{0, 0, 1}) == Poly{2, 0, 1});
  CHECK(apply(op({}), Poly{1, 2, 3}).is_zero());
  CHECK(op({Poly{0}, Poly{0}}).is_zero());
  CHECK(op({}).order() == kMinusInfinity);
}

TEST_CASE("compose") {
  CHECK(compose(xd, d) == op({Poly(), Poly(), x}));
  BranchOp dxd = compose(d, xd);
  CHECK(dxd == op({Poly(), Poly{1}, x}));
  CHECK(agrees_on_monomials(dxd, d, xd));
  BranchOp a = op({Poly{1, 2}, Poly{0, 0, 3}, Poly{Rational(1, 2)}});
  CHECK(compose(a, BranchOp::identity()) == a);
  CHECK(compose(BranchOp::identity(), a) == a);
  CHECK_THROWS_AS(compose(op({Poly::monomial(1, 20)}), op({Poly::monomial(1, 20)})),
                  DegreeCapExceeded);
}

TEST_CASE("commutator") {
  CHECK(commutator(xd, d) == -1 * d);
  CHECK(commutator(d, BranchOp::derivative(2)).is_zero());
  BranchOp x2d = op({Poly(), Poly{0, 0, 1}});
  BranchOp c = commutator(x2d, xd);
  CHECK(c == op({Poly(), Poly{0, 0, -1}}));
  for (int n = 0; n <= 6; ++n) {
    Poly p = Poly::monomial(1, n);
    CHECK(apply(c, p) == apply(x2d, apply(xd, p)) - apply(xd, apply(x2d, p)));
  }
}

TEST_CASE("delta_reduce") {
  CHECK(delta_reduce(d, x) == BranchOp::identity());
  CHECK(delta_reduce(BranchOp::multiplication(Poly{1, 2, 3}), x).is_zero());
  CHECK(delta_reduce(BranchOp::derivative(2), x) == 2 * d);
}

TEST_CASE("verify_order") {
  BranchOp a = op({Poly(), Poly{1}, x});
  CHECK(verify_order(a, 2, 6));
  CHECK_FALSE(verify_order(a, 1, 6));
  CHECK(verify_order(BranchOp::multiplication(Poly{1, 1, 1}), 0, 4));
  CHECK(verify_order(op({}), 0, 4));
  CHECK(verify_order(op({}), -1, 4));
  CHECK_FALSE(verify_order(BranchOp::identity(), -1, 4));
}

TEST_CASE("generate_conditions on K0") {
  for (int k = 1; k <= 4; ++k) {
    auto lines = generate_conditions(K0, k).lines();
    std::vector<std::string> expected = {"a0(0) = b0(0)"};
    for (int i = 1; i <= k; ++i) {
      expected.push_back("a" + std::to_string(i) + "(0) = 0");
      expected.push_back("b" + std::to_string(i) + "(0) = 0");
    }
    CHECK(lines == expected);
  }
}

TEST_CASE("generate_conditions on K1 order 2") {
  auto lines = generate_conditions(K1, 2).lines();
  auto has = [&](const std::string& s) {
    return std::find(lines.begin(), lines.end(), s) != lines.end();
  };
  CHECK(has("a2(0) = 0"));
  CHECK(has("b2(0) = 0"));
  CHECK(has("a2'(0) + a1(0) = 0"));
}

TEST_CASE("generate_conditions on K2 order 1") {
  // Frozen from conditions_oracle(K2, 1); the oracle is re-run below.
  const std::vector<std::string> expected = {
      "a0(0) = b0(0)",  "a0'(0) = b0'(0)", "a0''(0) = b0''(0)", "a1(0) = 0",
      "b1(0) = 0",      "a1'(0) = b1'(0)", "a1''(0) = b1''(0)",
  };
  CHECK(generate_conditions(K2, 1).lines() == expected);
}

TEST_CASE("generated conditions equal the unit-operator oracle") {
  for (int m = 0; m <= 3; ++m) {
    for (int k = 0; k <= 4; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(generate_conditions(SpaceSpec(m), k).rows() == conditions_oracle(SpaceSpec(m), k));
    }
  }
}

TEST_CASE("condition text parses back to the same set") {
  for (int m = 0; m <= 2; ++m) {
    for (int k = 0; k <= 3; ++k) {
      ConditionSet cs = generate_conditions(SpaceSpec(m), k);
      std::string text;
      for (const auto& l : cs.lines()) text += l + "\n";
      CHECK(parse_conditions(text, cs.columns()) == cs);
    }
  }
}

TEST_CASE("parse_conditions reports positions") {
  auto cols = operator_unknowns(1, 1);
  CHECK_THROWS_WITH_AS(parse_conditions("a0(0) = b0(0)\nc1(0) = 0\n", cols), doctest::Contains("line 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_conditions("a0(0) = 1\n", cols), std::invalid_argument);
  CHECK_THROWS_AS(parse_conditions("a7(0) = 0\n", cols), std::invalid_argument);
  CHECK(parse_conditions("a1(0) = 0 = b1(0)  # chain\n", cols).rank() == 2);
}

TEST_CASE("check_admissible") {
  auto report = check_admissible(d, d, K0, 1);
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0].constraint == "a1(0) = 0");
  CHECK(report.violations[0].lhs == 1);
  CHECK(report.violations[0].rhs == 0);
  CHECK(report.violations[1].constraint == "b1(0) = 0");

  CHECK(check_admissible(xd, xd, K1, 1).admissible());
  BranchOp t = op({Poly(), Poly{-1}, x});
  CHECK(check_admissible(t, t, K1, 2).admissible());
  CHECK_THROWS_AS(check_admissible(t, t, K1, 1), PreconditionViolation);
}

TEST_CASE("probe_admissible") {
  CHECK_FALSE(probe_admissible(d, d, K0, default_probe_depth(K0, 1)));
  BranchOp x2d2 = op({Poly(), Poly(), Poly{0, 0, 1}});
  CHECK(probe_admissible(x2d2, x2d2, K1, default_probe_depth(K1, 2)));
  CHECK(probe_admissible(xd, xd, K0, default_probe_depth(K0, 1)));
  CHECK(default_probe_depth(K2, 3) == 7);
}

TEST_CASE("pair_apply") {
  PairedOp p = make_paired(xd, xd, K1, 1);
  auto u = make_glued(x, x, K1);
  CHECK(pair_apply(p, u) == u);
  PairedOp zero = make_paired(op({}), op({}), K1, 0);
  CHECK(pair_apply(zero, u) == make_glued(Poly(), Poly(), K1));
  BranchOp t = op({Poly(), Poly{-1}, x});
  PairedOp pt = make_paired(t, t, K1, 2);
  GluedFunction out = pair_apply(pt, make_glued(Poly{0, 0, 1}, Poly{0, 0, 1, 1}, K1));
  CHECK(out.f() == apply(t, Poly{0, 0, 1}));
  CHECK(out.g() == apply(t, Poly{0, 0, 1, 1}));
  CHECK_THROWS_AS(pair_apply(p, glued_one(K0)), SpaceMismatch);
}

TEST_CASE("make_paired rejects non-admissible pairs") {
  try {
    (void)make_paired(d, d, K0, 1);
    FAIL("expected NotAdmissible");
  } catch (const NotAdmissible& e) {
    CHECK_FALSE(e.report().admissible());
  }
  CHECK_THROWS_AS(make_paired(BranchOp::derivative(2), op({}), K0, 1), PreconditionViolation);
}

TEST_CASE("pair_compose") {
  PairedOp p = make_paired(xd, xd, K1, 1);
  PairedOp sq = pair_compose(p, p);
  BranchOp expected = op({Poly(), x, Poly{0, 0, 1}});
  CHECK(sq.d1() == expected);
  CHECK(sq.d2() == expected);
  CHECK(sq.order() == 2);
  CHECK(check_admissible(sq.d1(), sq.d2(), K1, 2).admissible());

  PairedOp one = pair_multiplication(glued_one(K1));
  CHECK(pair_compose(p, one).d1() == p.d1());
  CHECK(pair_compose(one, p).d2() == p.d2());

  BranchOp x2d2 = op({Poly(), Poly(), Poly{0, 0, 1}});
  PairedOp q = make_paired(x2d2, x2d2, K1, 2);
  PairedOp pq = pair_compose(p, q);
  CHECK(pq.order() == 3);
  CHECK(check_admissible(pq.d1(), pq.d2(), K1, 3).admissible());
  CHECK_THROWS_AS(pair_compose(p, make_paired(xd, xd, K0, 1)), SpaceMismatch);
}

TEST_CASE("pair_commutator order") {
  PairedOp p = make_paired(xd, xd, K1, 1);
  BranchOp x2d = op({Poly(), Poly{0, 0, 1}});
  PairedOp q = make_paired(x2d, x2d, K1, 1);
  PairedOp c = pair_commutator(q, p);
  CHECK(c.order() == 1);
  CHECK(c.d1() == op({Poly(), Poly{0, 0, -1}}));
}

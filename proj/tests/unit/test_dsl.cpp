#include <doctest.h>

#include "kmalg/dsl.hpp"
#include "oracles.hpp"

using namespace kmalg;
using namespace kmalg::dsl;

namespace {

int error_line(const std::string& text) {
  try {
    (void)parse_document(text);
  } catch (const DslError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("polynomial syntax") {
  CHECK(parse_poly("3/2*x^2 - x + 1") == Poly{1, -1, Rational(3, 2)});
  CHECK(parse_poly("x") == Poly::x());
  CHECK(parse_poly("-x^3 + 2x") == Poly{0, 2, 0, -1});
  CHECK(parse_poly("0") == Poly());
  CHECK(parse_poly("-7/3") == Poly{Rational(-7, 3)});
  CHECK(parse_poly("y^2 + y") == Poly{0, 1, 1});
  CHECK(parse_poly("x*x") == Poly{0, 0, 1});
  CHECK_THROWS_AS(parse_poly("x + y"), DslError);
  CHECK_THROWS_AS(parse_poly("x^"), DslError);
  CHECK_THROWS_AS(parse_poly("3/0*x"), DslError);
  CHECK_THROWS_AS(parse_poly("2 x x +"), DslError);
  CHECK(parse_poly2("x*y + 2*x^2*y^3") == Poly2::monomial(1, 1, 1) + Poly2::monomial(2, 2, 3));
}

TEST_CASE("op blocks") {
  Value v = parse_dsl("op order=2\ncoeff 2: x\ncoeff 1: -1\ncoeff 0: 0\n");
  auto& b = std::get<OpBlock>(v);
  CHECK(b.declared_order == 2);
  CHECK(b.op == BranchOp({Poly(), Poly{-1}, Poly::x()}));

  try {
    (void)parse_dsl("op order=2\ncoeff 5: x\n");
    FAIL("expected DslError");
  } catch (const DslError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("exceeds declared order") != std::string::npos);
  }
  CHECK(error_line("op order=1\ncoeff 1: x\ncoeff 1: 1\n") == 3);
  CHECK(error_line("coeff 1: x\n") == 1);
}

TEST_CASE("paired blocks") {
  Value v = parse_dsl("# paired\nbranch x\nop order=1\ncoeff 1: x\nbranch y\nop order=1\ncoeff 1: y\n");
  auto& p = std::get<PairedBlock>(v);
  CHECK(p.x.op == p.y.op);
  CHECK(p.declared_order() == 1);
  CHECK(error_line("branch x\nop order=1\ncoeff 1: x\n") == 1);
}

TEST_CASE("glued pairs carry a source location") {
  CHECK(std::holds_alternative<GluedFunction>(parse_dsl("pair m=1: x + x^2 | x")));
  try {
    (void)parse_dsl("\n\npair m=1: x | 2x\n");
    FAIL("expected DslError");
  } catch (const DslError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 10);
  }
}

TEST_CASE("symbols and characters") {
  auto s = std::get<SymbolText>(parse_dsl("symbol deg=1 m=0: x^2 | y^2"));
  CHECK(s.degree == 1);
  CHECK(s.b == Poly{0, 0, 1});
  auto c = std::get<Character>(parse_dsl("char branch=2 at=-1/2"));
  CHECK(c == Character::at(Branch::kTwo, Rational(-1, 2)));
  CHECK(std::get<Character>(parse_dsl("char branch=1 at=0")) == Character::singular());
  CHECK(error_line("char branch=3 at=1") == 1);
  CHECK(error_line("char branch=sing at=1") == 1);
}

TEST_CASE("bare expressions and documents") {
  CHECK(std::holds_alternative<Poly>(parse_dsl("x^2 + 1")));
  CHECK(std::holds_alternative<Poly2>(parse_dsl("x + y")));
  auto docs = parse_document("x\n# comment only\n\nchar branch=sing at=0  # trailing\n");
  CHECK(docs.size() == 2);
  CHECK_THROWS_AS(parse_dsl("x\nx"), DslError);
  CHECK_THROWS_AS(parse_dsl(""), DslError);
}

TEST_CASE("degree cap applies while parsing") {
  CHECK_THROWS_AS(parse_document("x^40"), DslError);
  CHECK_NOTHROW(parse_document("x^40", Limits{64}));
}

TEST_CASE("rendering round-trips") {
  rnd::Engine rng(51);
  for (int i = 0; i < 100; ++i) {
    SpaceSpec s(i % 3);
    std::vector<Value> values = {
        rnd::poly(rng, 5),
        rnd::glued(rng, s, 5),
        Poly2::from_x(rnd::poly(rng, 3)) + Poly2::monomial(rnd::rational(rng) + 6, 1, 2),
        OpBlock{kmalg::testing::random_op(rng, 2, 3), 3},
        PairedBlock{{kmalg::testing::random_op(rng, 2, 3), 2}, {kmalg::testing::random_op(rng, 1, 3), 2}},
        SymbolText{2, rnd::poly(rng, 3), rnd::poly(rng, 3), s},
        Character::at(i % 2 ? Branch::kOne : Branch::kTwo, rnd::rational(rng)),
    };
    for (const auto& v : values) {
      CAPTURE(to_dsl(v));
      CHECK(parse_dsl(to_dsl(v)) == v);
    }
  }
}

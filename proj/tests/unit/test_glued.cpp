#include <doctest.h>

#include "kmalg/glued.hpp"
#include "kmalg/random.hpp"

using namespace kmalg;

namespace {
const SpaceSpec K0(0), K1(1), K2(2);
const Poly x = Poly::x();
}  // namespace

TEST_CASE("space descriptor") {
  CHECK(K1.name() == "K1");
  CHECK_THROWS_AS(SpaceSpec(-1), PreconditionViolation);
}

TEST_CASE("make_glued") {
  try {
    (void)make_glued(x, Poly{0, 2}, K1);
    FAIL("expected JetMismatch");
  } catch (const JetMismatch& e) {
    CHECK(e.index() == 1);
  }
  CHECK_NOTHROW(make_glued(Poly{0, 1, 1}, x, K1));
  CHECK_NOTHROW(make_glued(x, Poly(), K0));
  CHECK_THROWS_AS(make_glued(Poly{1}, Poly(), K0), JetMismatch);
}

TEST_CASE("glued_arith") {
  auto xx = make_glued(x, x, K1);
  CHECK(glued_arith(xx, xx, GluedOp::kMul) == make_glued(Poly{0, 0, 1}, Poly{0, 0, 1}, K1));
  auto left = make_glued(x, Poly(), K0);
  auto right = make_glued(Poly(), x, K0);
  CHECK(left * right == make_glued(Poly(), Poly(), K0));
  CHECK(glued_one(K2) + make_glued(x, x, K2) == make_glued(Poly{1, 1}, Poly{1, 1}, K2));
  CHECK_THROWS_AS(glued_one(K0) + glued_one(K1), SpaceMismatch);
}

TEST_CASE("extend_to_plane") {
  Poly h{0, 0, 1};
  Poly2 F = extend_to_plane(make_glued(x, Poly{0, 1, 1}, K1), h);
  CHECK(F == Poly2::from_x(x) + Poly2::monomial(1, 0, 1));
  CHECK(F.at_y_zero() == x);
  CHECK(F.substitute_y(h) == Poly{0, 1, 1});

  auto same = make_glued(Poly{3, 1, 4}, Poly{3, 1, 4}, K1);
  CHECK(extend_to_plane(same, h) == Poly2::from_x(Poly{3, 1, 4}));

  CHECK(extend_to_plane(make_glued(Poly(), Poly{0, 0, 1}, K1), h) == Poly2::monomial(1, 0, 1));
}

TEST_CASE("extend_to_plane rejects bad profiles") {
  auto u = make_glued(x, Poly{0, 1, 1}, K1);
  CHECK_THROWS_AS(extend_to_plane(u, Poly{0, 1}), PreconditionViolation);
  CHECK_THROWS_AS(extend_to_plane(u, Poly{0, 0, 0, 1}), PreconditionViolation);
  // x^2 + x^3 has the right order of zero but does not divide x^2.
  CHECK_THROWS_AS(extend_to_plane(u, Poly{0, 0, 1, 1}), InexactDivision);
}

TEST_CASE("restrict_to_branches") {
  Poly h{0, 0, 1};
  CHECK(restrict_to_branches(Poly2::from_x(x) + Poly2::monomial(1, 0, 1), h, K1) ==
        make_glued(x, Poly{0, 1, 1}, K1));
  CHECK(restrict_to_branches(Poly2::monomial(1, 1, 1), h, K1) ==
        make_glued(Poly(), Poly{0, 0, 0, 1}, K1));
  CHECK(restrict_to_branches(Poly2::from_x(Poly{Rational(5, 2)}), Poly{0, 0, 0, 7}, K2) ==
        make_glued(Poly{Rational(5, 2)}, Poly{Rational(5, 2)}, K2));
  CHECK_THROWS_AS(restrict_to_branches(Poly2::monomial(1, 6, 6), h, K1, Limits{10}),
                  DegreeCapExceeded);
}

TEST_CASE("restrict then extend roundtrip") {
  rnd::Engine rng(21);
  for (int m = 0; m <= 3; ++m) {
    SpaceSpec s(m);
    Poly h = default_profile(s);
    for (int i = 0; i < 100; ++i) {
      GluedFunction u = rnd::glued(rng, s, 6);
      Poly2 F = extend_to_plane(u, h);
      CHECK(restrict_to_branches(F, h, s) == u);
      CHECK(extend_to_plane(restrict_to_branches(F, h, s), h) == F);
    }
  }
}

TEST_CASE("restriction of random plane polynomials lands in A") {
  rnd::Engine rng(22);
  for (int m = 0; m <= 3; ++m) {
    SpaceSpec s(m);
    for (int i = 0; i < 200; ++i) {
      Poly2 F;
      for (int j = 0; j <= 3; ++j) F += Poly2::monomial(rnd::rational(rng), 0, j) * Poly2::from_x(rnd::poly(rng, 3));
      Poly h = default_profile(s) * Poly{1 + i % 3, rnd::rational(rng)};
      if (i % 3 == 2) h = default_profile(s);  // also exercise the canonical profile exactly
      CHECK_NOTHROW(restrict_to_branches(F, h, s));
    }
  }
}

TEST_CASE("glued_arith preserves membership") {
  rnd::Engine rng(23);
  for (int m = 0; m <= 3; ++m) {
    SpaceSpec s(m);
    for (int i = 0; i < 200; ++i) {
      auto u = rnd::glued(rng, s, 5);
      auto v = rnd::glued(rng, s, 5);
      auto sum = u + v;
      auto prod = u * v;
      CHECK(jet_project(sum.f(), m) == jet_project(sum.g(), m));
      CHECK(jet_project(prod.f(), m) == jet_project(prod.g(), m));
    }
  }
}

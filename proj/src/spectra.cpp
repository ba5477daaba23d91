#include "kmalg/spectra.hpp"

#include "kmalg/conditions.hpp"
#include "kmalg/random.hpp"

namespace kmalg {

Character Character::at(Branch branch, const Rational& base_point) {
  if (branch == Branch::kSingular || base_point.is_zero()) {
    return Character(Branch::kSingular, Rational(0));
  }
  return Character(branch, base_point);
}

std::string Character::str() const {
  switch (branch_) {
    case Branch::kOne:
      return "char branch=1 at=" + base_point_.str();
    case Branch::kTwo:
      return "char branch=2 at=" + base_point_.str();
    case Branch::kSingular:
      break;
  }
  return "char branch=sing at=0";
}

Rational char_eval(const Character& c, const GluedFunction& u) {
  switch (c.branch()) {
    case Branch::kOne:
      return u.f().eval(c.base_point());
    case Branch::kTwo:
      return u.g().eval(c.base_point());
    case Branch::kSingular:
      break;
  }
  return u.jet()[0];
}

bool is_homomorphism(const Functional& h, SpaceSpec space, int samples, std::uint64_t seed) {
  if (h(glued_one(space)) != Rational(1)) return false;
  rnd::Engine rng(seed);
  for (int i = 0; i < samples; ++i) {
    GluedFunction u = rnd::glued(rng, space, 4);
    GluedFunction v = rnd::glued(rng, space, 4);
    if (h(u + v) != h(u) + h(v)) return false;
    if (h(u * v) != h(u) * h(v)) return false;
  }
  return true;
}

bool char_is_homomorphism(const Character& c, SpaceSpec space, int samples, std::uint64_t seed) {
  return is_homomorphism([&c](const GluedFunction& u) { return char_eval(c, u); }, space, samples,
                         seed);
}

std::optional<GluedFunction> separating_witness(const Character& c1, const Character& c2,
                                                SpaceSpec space, int max_degree) {
  for (auto& u : spanning_family(space, max_degree)) {
    if (char_eval(c1, u) != char_eval(c2, u)) return u;
  }
  return std::nullopt;
}

namespace {

SymbolElem coordinate_symbol(int degree, SpaceSpec space) {
  return make_symbol(degree, Poly::x(), Poly::x(), space);
}

SymbolElem monomial_symbol(int exponent, int degree, SpaceSpec space) {
  Poly p = Poly::monomial(Rational(1), exponent);
  return make_symbol(degree, p, p, space);
}

// Runs `body`, turning library errors into a failed check.
IdentityCheck run_check(std::string name, const std::function<std::string()>& body) {
  try {
    return {std::move(name), true, body()};
  } catch (const Error& e) {
    return {std::move(name), false, e.what()};
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ClosureViolation(what);
}

}  // namespace

IdealFactorization maximal_ideal_factor(const SymbolElem& s) {
  if (s.space().contact_order() != 0) {
    throw PreconditionViolation("maximal_ideal_factor is defined on K0 only");
  }
  if (s.degree() < 1) throw PreconditionViolation("maximal_ideal_factor needs degree >= 1");
  // Positive-degree symbols on K0 vanish at 0, so x divides both branches.
  Poly alpha = divide_exact(s.a(), Poly::x());
  Poly beta = divide_exact(s.b(), Poly::x());
  SymbolElem g = coordinate_symbol(0, s.space());
  SymbolElem t =
      make_symbol(2 * s.degree(), (alpha * alpha).shift(1), (beta * beta).shift(1), s.space());
  if (symbol_mul(s, s) != symbol_mul(g, t)) {
    throw ClosureViolation("square factorization failed for " + s.str());
  }
  return {std::move(g), std::move(t)};
}

bool NullityReport::all_passed() const {
  for (const auto& c : identities) {
    if (!c.passed) return false;
  }
  return true;
}

NullityReport nullity_identity_check(SpaceSpec space) {
  const int m = space.contact_order();
  if (m > 1) {
    throw PreconditionViolation("nullity identities are available for K0 and K1 only, not " +
                                space.name());
  }
  NullityReport report{space, {}, {}};
  const Character origin = Character::singular();
  report.identities.push_back(run_check("(x, y) lies in S_0 and vanishes at the singular point", [&] {
    SymbolElem g = coordinate_symbol(0, space);
    GluedFunction as_function = make_glued(g.a(), g.b(), space);
    require(char_eval(origin, as_function).is_zero(), "(x, y) does not vanish at 0");
    return g.str();
  }));

  if (m == 0) {
    const std::vector<SymbolElem> samples = {
        make_symbol(1, Poly{0, 1}, Poly{0, -1}, space),
        make_symbol(1, Poly{0, 0, 1}, Poly{0, 0, 1}, space),
        make_symbol(2, Poly{0, 2, 0, -1}, Poly{0, 3, 1}, space),
        make_symbol(3, Poly{0, Rational(1, 2), 0, 0, 1}, Poly{0, 0, 0, -1}, space),
        zero_symbol(2, space),
    };
    for (const auto& s : samples) {
      report.identities.push_back(run_check("Hadamard split of " + s.str(), [&] {
        // (a, b) = (a'(0) x, b'(0) y) + (x, y) (x a~, y b~)
        auto sa = hadamard_split(s.a(), 2);
        auto sb = hadamard_split(s.b(), 2);
        require(sa.head.coeff(0).is_zero() && sb.head.coeff(0).is_zero(),
                "symbol does not vanish at 0");
        SymbolElem linear = make_symbol(s.degree(), sa.head, sb.head, space);
        SymbolElem rest = make_symbol(s.degree(), sa.tail.shift(1), sb.tail.shift(1), space);
        SymbolElem rebuilt = symbol_add(linear, symbol_mul(coordinate_symbol(0, space), rest));
        require(rebuilt == s, "decomposition does not reproduce the symbol");
        return linear.str() + " + (x, y) * " + rest.str();
      }));
      report.identities.push_back(run_check("square factorization of " + s.str(), [&] {
        IdealFactorization fac = maximal_ideal_factor(s);
        return "s*s = " + fac.g.str() + " * " + fac.t.str();
      }));
    }
    return report;
  }

  for (int k : {1, 2}) {
    const int cube = 3 * k;
    report.identities.push_back(
        run_check("cube (x, y)_" + std::to_string(k) + "^3 = (x^3, y^3)_" + std::to_string(cube),
                  [&] {
                    SymbolElem s = coordinate_symbol(k, space);
                    SymbolElem lhs = symbol_mul(symbol_mul(s, s), s);
                    require(lhs == monomial_symbol(3, cube, space), "cube mismatch");
                    return lhs.str();
                  }));
    report.identities.push_back(run_check(
        "(x^3, y^3)_" + std::to_string(cube) + " = (x, y)_0 * (x^2, y^2)_" + std::to_string(cube),
        [&] {
          SymbolElem rhs =
              symbol_mul(coordinate_symbol(0, space), monomial_symbol(2, cube, space));
          require(rhs == monomial_symbol(3, cube, space), "factorization mismatch");
          return rhs.str();
        }));
  }
  report.notes.push_back(
      "reduction of a general symbol to its second-order Taylor part is not checked; only the "
      "cube and factorization identities above are");
  return report;
}

}  // namespace kmalg

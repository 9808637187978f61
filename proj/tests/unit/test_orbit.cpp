// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "dynr/errors.hpp"
#include "dynr/orbit.hpp"

using namespace dynr;

namespace {

using M = std::array<Rational, 4>;  // row-major 2x2

M mul(const M& a, const M& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}
M inv(const M& g) { return {g[3], -g[1], -g[2], g[0]}; }  // det 1

const M X{0, 1, 0, 0}, Y{0, 0, 1, 0}, H{1, 0, 0, -1};

// (lambda/2) tr(g H g^{-1} a) at a concrete g, computed directly
FieldElement direct_fa(const M& g, const M& a) {
  const M t = mul(mul(mul(g, H), inv(g)), a);
  const FieldElement lam = FieldElement::variable(twist_context(), "lambda");
  return lam * FieldElement(Rational(t[0] + t[3]) / 2);
}

const std::vector<M> points{{1, 0, 0, 1}, {2, 3, 1, 2}, {1, Rational(1, 2), -2, 0}, {3, -1, 4, -1}};

}  // namespace

TEST_CASE("orbit functions agree with the matrix formula") {
  for (const auto& [n, a] : std::vector<std::pair<std::string, M>>{{"x", X}, {"y", Y}, {"h", H}}) {
    const OrbitFunction f = orbit_function(n);
    for (const auto& g : points) CHECK(f.at(g) == direct_fa(g, a));
  }
  const FieldElement lam = FieldElement::variable(twist_context(), "lambda");
  CHECK(orbit_function("h").at({1, 0, 0, 1}) == lam);
  CHECK(orbit_function("x").at({1, 0, 0, 1}) == FieldElement(0));
  LieVector sum{{0, 1}, {2, 3}};
  CHECK(orbit_function(sum) == orbit_function("x") + FieldElement(3) * orbit_function("h"));
}

TEST_CASE("normal form is unique and respects det = 1") {
  const auto g11 = OrbitFunction::coordinate(1, 1), g12 = OrbitFunction::coordinate(1, 2),
             g21 = OrbitFunction::coordinate(2, 1), g22 = OrbitFunction::coordinate(2, 2);
  CHECK(g11 * g22 - g12 * g21 == OrbitFunction(FieldElement(1)));
  const OrbitFunction p = (g11 * g11 * g22 * g22) * g12;
  for (const auto& [e, c] : p.terms()) CHECK((e[0] == 0 || e[3] == 0));
  for (const auto& g : points) CHECK(p.at(g) == FieldElement(g[0] * g[0] * g[3] * g[3] * g[1]));
  CHECK_THROWS_AS(p.at({1, 1, 1, 1}), InvalidInput);
}

TEST_CASE("invariant derivatives") {
  const UEAPtr U = sl2_uea();
  const auto x = UEATensor::generator(U, "x"), y = UEATensor::generator(U, "y"),
             h = UEATensor::generator(U, "h");
  for (const std::string a : {"x", "y", "h"}) {
    const OrbitFunction f = orbit_function(a);
    CHECK(invariant_derivative(x * x, f).is_zero());
    CHECK(invariant_derivative(y * y, f).is_zero());
    CHECK(invariant_derivative(h, f).is_zero());
  }
  // composition order: ->(xy) f = ->x(->y f)
  const OrbitFunction f = orbit_function("x") * orbit_function("y");
  CHECK(invariant_derivative(x * y, f) == invariant_derivative(x, invariant_derivative(y, f)));
  CHECK(invariant_derivative(x * y - y * x, f) == invariant_derivative(h, f));
  // the det relation is preserved by a traceless field
  const auto g11 = OrbitFunction::coordinate(1, 1), g12 = OrbitFunction::coordinate(1, 2),
             g21 = OrbitFunction::coordinate(2, 1), g22 = OrbitFunction::coordinate(2, 2);
  for (const auto& v : {x, y, h}) CHECK(invariant_derivative(v, g11 * g22 - g12 * g21).is_zero());
  // derivative along v at the identity: d/dt f(exp(tv)) for f = g12, v = x gives 1
  CHECK(invariant_derivative(x, g12).at({1, 0, 0, 1}) == FieldElement(1));
}

TEST_CASE("star product basics") {
  const FieldElement lam = FieldElement::variable(twist_context(), "lambda");
  const OrbitFunction fx = orbit_function("x"), fy = orbit_function("y"), fh = orbit_function("h");
  const OrbitFunction one(FieldElement(1));
  const FieldElement half(Rational(1, 2));
  CHECK(star_product(fx, fy) == (1 - 1 / lam) * (fx * fy) + half * fh + OrbitFunction(lam / 2));
  CHECK(star_product(fh, fh) == (1 - 1 / lam) * (fh * fh) + OrbitFunction(lam));
  CHECK(star_product(fx, one) == fx);
  CHECK(star_product(one, fh * fy) == fh * fy);
  CHECK_THROWS_AS(star_product(OrbitFunction::coordinate(1, 1), fx), InvalidInput);
  // low hbar orders of the formal product
  const OrbitFunction a = fx * fy, b = fh * fh;
  const auto series = star_product_series(a, b, 3);
  CHECK(series[0] == a * b);
  const UEAPtr U = sl2_uea();
  const auto X = UEATensor::generator(U, "x"), Y = UEATensor::generator(U, "y");
  CHECK(series[1] == (-1 / lam) * (invariant_derivative(Y, a) * invariant_derivative(X, b)));
  // hbar^2: n = 1 term times 0, n = 2 term 1/(2 lambda^2)
  CHECK(series[2] == (1 / (2 * lam * lam)) * (invariant_derivative(Y * Y, a) * invariant_derivative(X * X, b)));
}

TEST_CASE("star series agrees with applying the twist directly") {
  const TwistSeries J = abrr_twist(4);
  const OrbitFunction a = orbit_function("x") * orbit_function("y"), b = orbit_function("h") * orbit_function("x");
  const auto direct = apply_twist(J, a, b);
  const auto scalar = star_product_series(a, b, 4);
  for (std::size_t k = 0; k <= 4; ++k) CHECK(direct[k] == scalar[k]);
}

TEST_CASE("orbit identities") {
  const OrbitIdentityReport rep = verify_orbit_identities();
  CHECK(rep.fafb_residuals.size() == 9);
  for (const auto& [n, r] : rep.fafb_residuals) CHECK_MESSAGE(r.is_zero(), n);
  for (const auto& [n, r] : rep.commutator_residuals) CHECK_MESSAGE(r.is_zero(), n);
  for (const auto& [n, r] : rep.quasiclassical_residuals) CHECK_MESSAGE(r.is_zero(), n);
  for (const auto& [n, r] : rep.equivariance_residuals) CHECK_MESSAGE(r.is_zero(), n);
  for (const auto& [n, r] : rep.twist_agreement_residuals) CHECK_MESSAGE(r.is_zero(), n);
  CHECK(rep.casimir_residual.is_zero());
  CHECK(rep.associativity_triples == 125);
  CHECK(rep.associativity_failures.empty());
  CHECK(rep.graded_dims_orbit == std::vector<std::size_t>{1, 4, 9, 16, 25});
  CHECK(rep.graded_dims_quotient == std::vector<std::size_t>{1, 4, 9, 16, 25});
  CHECK(rep.passed());
}

TEST_CASE("mutated product breaks associativity") {
  // a star product with the wrong second coefficient is not associative
  auto bad = [](const OrbitFunction& a, const OrbitFunction& b) { return star_product(a, b, {{2, 2}}); };
  const OrbitFunction fx = orbit_function("x"), fy = orbit_function("y"), fh = orbit_function("h");
  const std::vector<OrbitFunction> set{fx, fy, fh, fx * fy, fh * fh};
  int failures = 0;
  for (const auto& a : set)
    for (const auto& b : set)
      for (const auto& c : set)
        if (!(bad(bad(a, b), c) == bad(a, bad(b, c)))) ++failures;
  CHECK(failures > 0);
}

TEST_CASE("property: bilinearity, unit, derivations and random SL(2) points") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-3, 3);
  const std::vector<OrbitFunction> gens{orbit_function("x"), orbit_function("y"), orbit_function("h")};
  auto random_f = [&]() {
    OrbitFunction f(FieldElement(small(rng)));
    for (int t = 0; t < 3; ++t) {
      OrbitFunction m(FieldElement(small(rng)));
      const int deg = 1 + static_cast<int>(rng() % 2);
      for (int d = 0; d < deg; ++d) m = m * gens[rng() % 3];
      f += m;
    }
    return f;
  };
  const OrbitFunction one(FieldElement(1));
  const UEAPtr U = sl2_uea();
  for (int trial = 0; trial < 6; ++trial) {
    const OrbitFunction a = random_f(), b = random_f(), c = random_f();
    const FieldElement s(small(rng));
    CHECK(star_product(a + s * b, c) == star_product(a, c) + s * star_product(b, c));
    CHECK(star_product(a, b + c) == star_product(a, b) + star_product(a, c));
    CHECK(star_product(one, a) == a);
    CHECK(star_product(a, one) == a);
    // left-invariant fields are derivations of the pointwise product
    for (const char* v : {"x", "y", "h"}) {
      const UEATensor g = UEATensor::generator(U, v);
      CHECK(invariant_derivative(g, a * b) == invariant_derivative(g, a) * b + a * invariant_derivative(g, b));
    }
    // normal form evaluates like the unreduced product at det-1 points
    const Rational p(small(rng)), q(small(rng));
    const std::array<Rational, 4> g{1 + p * q, p, q, 1};  // [[1,p],[0,1]] [[1,0],[q,1]]
    CHECK((a * b).at(g) == a.at(g) * b.at(g));
  }
}

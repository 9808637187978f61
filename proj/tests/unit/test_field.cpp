// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "dynr/errors.hpp"
#include "dynr/field.hpp"
#include "support/random_field.hpp"

using namespace dynr;

namespace {

// Cross-multiplication oracle: p1/q1 == p2/q2 iff p1*q2 - p2*q1 == 0.
bool same_fraction(const Polynomial& p1, const Polynomial& q1, const Polynomial& p2,
                   const Polynomial& q2) {
  return (p1 * q2 - p2 * q1).is_zero();
}

struct Vars {
  ContextPtr ctx = Context::make({"lambda", "hbar", "t1"});
  FieldElement lam = FieldElement::variable(ctx, "lambda");
  FieldElement hb = FieldElement::variable(ctx, "hbar");
  FieldElement t1 = FieldElement::variable(ctx, "t1");
  Polynomial P(const char* name) const {
    return Polynomial::variable(ctx->size(), ctx->require(name));
  }
  Polynomial one() const { return Polynomial::constant(ctx->size(), 1); }
};

}  // namespace

TEST_CASE("field_arith basic identities") {
  Vars v;
  CHECK((v.lam + (-v.lam)).is_zero());
  CHECK(((1 / v.lam) * v.lam).is_one());
  CHECK_THROWS_AS(v.lam / FieldElement::constant(v.ctx, 0), DivisionByZero);
}

TEST_CASE("product of reciprocals matches the cross-multiplication oracle") {
  Vars v;
  const FieldElement direct = 1 / (v.lam * (v.lam - v.hb));
  const FieldElement product = (1 / v.lam) * (1 / (v.lam - v.hb));
  CHECK(direct == product);
  const Polynomial lam = v.P("lambda"), hb = v.P("hbar");
  CHECK(same_fraction(direct.numerator(), direct.denominator(), v.one(), lam * (lam - hb)));
}

TEST_CASE("canonical form removes the gcd and makes the denominator monic") {
  Vars v;
  const FieldElement f = (v.lam * v.lam - v.hb * v.hb) / (2 * v.lam + 2 * v.hb);
  CHECK(f == (v.lam - v.hb) / 2);
  CHECK(f.denominator().is_constant());
  const FieldElement g = (v.t1 + 1) / (3 * v.t1 - 3);
  CHECK(g.denominator().leading_coefficient() == 1);
}

TEST_CASE("differentiate") {
  Vars v;
  CHECK(v.lam.inverse().differentiate("lambda") == -(v.lam.pow(-2)));
  CHECK(FieldElement::constant(v.ctx, 7).differentiate("lambda").is_zero());
  CHECK_THROWS_AS(v.lam.differentiate("mu"), UnknownParameter);

  // quotient-rule oracle built independently from polynomials
  const FieldElement f = 1 / (v.lam * (v.lam - v.hb));
  const FieldElement d = f.differentiate("lambda");
  const Polynomial lam = v.P("lambda"), hb = v.P("hbar");
  const Polynomial expected_num = -(lam * Rational(2) - hb);
  const Polynomial expected_den = lam * lam * (lam - hb) * (lam - hb);
  CHECK(same_fraction(d.numerator(), d.denominator(), expected_num, expected_den));
}

TEST_CASE("series_expand") {
  Vars v;
  const auto s = series_expand(1 / (v.lam - v.hb), "hbar", 2);
  REQUIRE(s.coefficients.size() == 3);
  // geometric-series oracle: 1/(l - h) = sum h^k / l^(k+1)
  for (int k = 0; k <= 2; ++k) CHECK(s.coefficients[k] == v.lam.pow(-(k + 1)));

  const auto t = series_expand(v.lam, "hbar", 3);
  CHECK(t.coefficients[0] == v.lam);
  for (int k = 1; k <= 3; ++k) CHECK(t.coefficients[k].is_zero());

  CHECK_THROWS_AS(series_expand(1 / v.hb, "hbar", 2), PoleError);
}

TEST_CASE("evaluate") {
  Vars v;
  const FieldElement one = FieldElement::constant(v.ctx, 1);
  CHECK((v.hb * v.hb / v.lam).evaluate({{"hbar", one}}) == 1 / v.lam);
  CHECK_THROWS_AS(((v.t1 + 1) / (v.t1 - 1)).evaluate({{"t1", one}}), PoleError);
  const FieldElement casimir = v.lam * (v.lam + 2) / 2;
  CHECK(casimir.evaluate({{"lambda", FieldElement::constant(v.ctx, 3)}}) == Rational(15, 2));
  CHECK_THROWS_AS(v.lam.evaluate({{"mu", one}}), UnknownParameter);
}

TEST_CASE("contexts do not mix") {
  auto a = Context::make({"lambda"});
  auto b = Context::make({"lambda"});
  const auto x = FieldElement::variable(a, "lambda");
  const auto y = FieldElement::variable(b, "lambda");
  CHECK_THROWS_AS(x + y, ContextMismatch);
  CHECK((x + 1) - x == FieldElement(1));
}

TEST_CASE("serialization grammar") {
  Vars v;
  CHECK((-(v.t1 * v.t1) / (2 * (v.t1 - 1))).to_string() == "-t1^2/(2*t1-2)");
  CHECK((v.lam * (v.lam + 2) / 2).to_string() == "(lambda^2+2*lambda)/2");
  CHECK(FieldElement(Rational(1, 2)).to_string() == "1/2");
  CHECK((1 / v.lam).to_string() == "1/lambda");
  CHECK(FieldElement::parse(v.ctx, "(-1)*t1^2/(2*(t1-1))") == -(v.t1 * v.t1) / (2 * (v.t1 - 1)));
  CHECK(FieldElement::parse(v.ctx, "lambda^-2") == v.lam.pow(-2));
  CHECK_THROWS_AS(FieldElement::parse(v.ctx, "lambda +"), InvalidInput);
  CHECK_THROWS_AS(FieldElement::parse(v.ctx, "mu"), UnknownParameter);
}

TEST_CASE("property: field axioms, Leibniz rule and print/parse round trip") {
  Vars v;
  std::mt19937 rng(20240611);
  testsupport::RandomField gen(v.ctx, rng);
  for (int trial = 0; trial < 40; ++trial) {
    const FieldElement a = gen.element(), b = gen.element(), c = gen.element();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK((a / a).is_one());
    CHECK((a * b).differentiate("lambda") ==
          a.differentiate("lambda") * b + a * b.differentiate("lambda"));
    CHECK(FieldElement::parse(v.ctx, a.to_string()) == a);
  }
}

TEST_CASE("property: truncated series agrees with f modulo var^(N+1)") {
  Vars v;
  std::mt19937 rng(77);
  testsupport::RandomField gen(v.ctx, rng);
  const std::size_t hb = v.ctx->require("hbar");
  int checked = 0;
  while (checked < 20) {
    const FieldElement f = gen.element();
    if (f.denominator().coefficients_in(hb).count(0) == 0) continue;
    const std::size_t order = 3;
    const auto s = series_expand(f, "hbar", order);
    const FieldElement diff = f - resum(v.ctx, s);
    if (!diff.is_zero()) {
      int min_deg = 1 << 20;
      for (const auto& [m, c] : diff.numerator().terms()) min_deg = std::min(min_deg, m[hb]);
      CHECK(min_deg >= static_cast<int>(order + 1));
    }
    ++checked;
  }
}

TEST_CASE("multivariate gcd recovers planted common factors") {
  Vars v;
  std::mt19937 rng(5);
  testsupport::RandomField gen(v.ctx, rng);
  for (int trial = 0; trial < 25; ++trial) {
    const Polynomial a = gen.polynomial(2), b = gen.polynomial(2), c = gen.polynomial(2);
    if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
    const Polynomial g = gcd(a * c, b * c);
    CHECK_NOTHROW(exact_divide(g, c.monic()));
    CHECK_NOTHROW(exact_divide(a * c, g));
    CHECK_NOTHROW(exact_divide(b * c, g));
  }
}

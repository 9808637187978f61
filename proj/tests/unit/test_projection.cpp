// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "dynr/errors.hpp"
#include "dynr/projection.hpp"

using namespace dynr;

namespace {

FieldElement lam() { return FieldElement::variable(twist_context(), "lambda"); }

}  // namespace

TEST_CASE("standard splitting of sl(2)") {
  const SplittingData sp = split_basis_sl2();
  const LieAlgebra& g = sp.split->lie();
  const std::size_t b = g.index("b"), a = g.index("a"), c = g.index("c");
  // [c,b] = b + c, [-c,a] = a - c, [b,a] = a - b
  CHECK(g.bracket(c, b) == LieVector{{b, 1}, {c, 1}});
  CHECK(g.bracket(a, c) == LieVector{{a, 1}, {c, -1}});
  CHECK(g.bracket(b, a) == LieVector{{a, 1}, {b, -1}});
  CHECK(sp.split->gen_names() == std::vector<std::string>{"b", "a", "c"});
  CHECK_NOTHROW(split_basis_sl2(2));
  CHECK_THROWS_AS(split_basis_sl2(0), InvalidInput);
}

TEST_CASE("rising factorial lemma") {
  const SplittingData sp = split_basis_sl2();
  const UEATensor b = UEATensor::generator(sp.split, "b");
  const UEATensor one = UEATensor::scalar(sp.split, 1, 1);
  CHECK(rising_factorial_projection(1).brute == b);
  CHECK(rising_factorial_projection(2).brute == b * b + b);
  CHECK(rising_factorial_projection(4).brute ==
        b * (b + one) * (b + FieldElement(2) * one) * (b + FieldElement(3) * one));
  for (int n = 0; n <= 6; ++n) {
    CHECK(rising_factorial_projection(n).equal);
    CHECK(cb_identity_residual(n, sp).is_zero());
  }
}

TEST_CASE("projected ABRR twist matches the closed form") {
  const SplittingData sp = split_basis_sl2();
  const TwistSeries J = abrr_twist(5);
  const TwistSeries Jv = project_twist(J, sp);
  const TwistSeries closed = closed_form_jv(5);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(Jv.orders[k] == closed.orders[k]);
  const UEATensor b = UEATensor::generator(sp.split, "b"), a = UEATensor::generator(sp.split, "a");
  CHECK(Jv.orders[1] == -(1 / lam()) * tensor(b, a));
  // every coefficient avoids c
  const std::size_t cpos = sp.split->position("c");
  for (const auto& ord : Jv.orders)
    for (const auto& [key, coeff] : ord.terms())
      for (const auto& e : key) CHECK(e[cpos] == 0);
}

TEST_CASE("projected twist is a twist for Uv") {
  const TwistSeries Jv = project_twist(abrr_twist(5), split_basis_sl2());
  const TwistReport rep = check_nondynamical_twist(Jv, 5);
  CHECK(rep.passed());
  CHECK(check_nondynamical_twist(TwistSeries::trivial(Jv.alg, 3), 3).passed());

  // second splitting, not covered by the closed form
  const TwistReport rep2 = check_nondynamical_twist(project_twist(abrr_twist(4), split_basis_sl2(2)), 4);
  CHECK(rep2.passed());
}

TEST_CASE("perturbed closed form fails the twist equation") {
  const SplittingData sp = split_basis_sl2();
  TwistSeries bad = closed_form_jv(3);
  const UEATensor b = UEATensor::generator(sp.split, "b"), a = UEATensor::generator(sp.split, "a");
  const UEATensor one = UEATensor::scalar(sp.split, 1, 1);
  // double the v_2 summand at hbar^2
  bad.orders[2] += (1 / (2 * lam() * lam())) * tensor(b * (b + one), a * (a + one));
  const TwistReport rep = check_nondynamical_twist(bad, 3);
  CHECK(rep.residuals[0].is_zero());
  CHECK(rep.residuals[1].is_zero());
  CHECK_FALSE(rep.residuals[2].is_zero());
}

TEST_CASE("projection properties") {
  const SplittingData sp = split_basis_sl2();
  const TwistSeries J = abrr_twist(4);
  const TwistSeries Jv = project_twist(J, sp);
  // idempotence: projecting the split image again changes nothing
  for (const auto& c : Jv.orders) CHECK(project_along_ideal(c, sp.h_gens) == c);
  const TwistSeries Jh = complement_twist(J, sp);
  for (std::size_t k = 0; k <= 4; ++k) CHECK(project_along_ideal(Jh.orders[k], sp.h_gens).is_zero());
  for (const auto& [l, r] : projection_residuals(J, sp, 4)) {
    CHECK(l.is_zero());
    CHECK(r.is_zero());
  }
}

TEST_CASE("non-invariant twists are refused") {
  const SplittingData sp = split_basis_sl2();
  TwistSeries J = abrr_twist(2);
  J.orders[1] += tensor(UEATensor::generator(sp.ambient, "x"), UEATensor::scalar(sp.ambient, 1, 1));
  CHECK_THROWS_AS(project_twist(J, sp), InvalidInput);
}

TEST_CASE("property: projection is a left Uv-module map and idempotent") {
  std::mt19937 rng(3);
  const SplittingData sp = split_basis_sl2();
  const UEAPtr G = sp.ambient;
  const std::vector<std::string> names{"x", "y", "h"};
  auto random_u = [&]() {
    UEATensor u = UEATensor::scalar(G, 1, FieldElement(static_cast<long>(rng() % 5)));
    for (int t = 0; t < 3; ++t) {
      UEATensor m = UEATensor::scalar(G, 1, FieldElement(static_cast<long>(rng() % 7) - 3));
      for (int d = 0; d < 3; ++d) m = m * UEATensor::generator(G, names[rng() % 3]);
      u += m;
    }
    return u;
  };
  const UEATensor b = UEATensor::generator(sp.split, "b"), a = UEATensor::generator(sp.split, "a");
  for (int trial = 0; trial < 8; ++trial) {
    const UEATensor u = random_u();
    const UEATensor pu = project_along_ideal(change_generators(u, sp.split), sp.h_gens);
    CHECK(project_along_ideal(pu, sp.h_gens) == pu);
    for (const auto& v : {b, a, b * a}) {
      const UEATensor vu = change_generators(change_generators(v, G) * u, sp.split);
      CHECK(project_along_ideal(vu, sp.h_gens) == v * pu);
    }
  }
}

// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <set>

#include "doctest.h"
#include "dynr/classify.hpp"
#include "dynr/errors.hpp"

using namespace dynr;

namespace {

const FieldElement half{Rational(1, 2)};

std::vector<Root> pm(const Root& r) { return {r, -r}; }

struct Fixture {
  const char* name;
  char type;
  int rank;
  std::vector<Root> delta, U;
};

std::vector<Fixture> fixtures() {
  return {{"A2 D={a1} U={±a1}", 'A', 2, {{1, 0}}, pm({1, 0})},
          {"A2 D={a1} U=0", 'A', 2, {{1, 0}}, {}},
          {"A3 D={a1,a3} U={±a1}", 'A', 3, {{1, 0, 0}, {0, 0, 1}}, pm({1, 0, 0})},
          {"B2 D={a1} U=0", 'B', 2, {{1, 0}}, {}},
          {"A2 D=Pi U=0", 'A', 2, {{1, 0}, {0, 1}}, {}},
          {"B2 D=Pi U={±a2}", 'B', 2, {{1, 0}, {0, 1}}, pm({0, 1})},
          {"C3 D={a2,a3} U=0", 'C', 3, {{0, 1, 0}, {0, 0, 1}}, {}}};
}

}  // namespace

TEST_CASE("build_coefficients on the A2 cases") {
  const RootSystem rs('A', 2);
  const auto fam = build_coefficients(make_spec(rs, {{1, 0}}, pm({1, 0})));
  CHECK(fam.at(rs, {1, 0}).is_zero());
  CHECK(fam.at(rs, {-1, 0}).is_zero());
  CHECK(fam.at(rs, {0, 1}) == half);
  CHECK(fam.at(rs, {1, 1}) == half);
  CHECK(fam.at(rs, {0, -1}) == -half);
  CHECK(fam.at(rs, {-1, -1}) == -half);

  const auto gen = build_coefficients(make_spec(rs, {{1, 0}}, {}));
  const FieldElement t = FieldElement::variable(t_context(2), "t1");
  CHECK(gen.at(rs, {1, 0}) == half * (t + 1) / (t - 1));
  CHECK(gen.at(rs, {-1, 0}) == half * (1 / t + 1) / (1 / t - 1));
  CHECK(gen.at(rs, {0, 1}) == half);

  const auto flat = build_coefficients(make_spec(rs, {}, {}));
  for (const Root& r : rs.roots()) CHECK(flat.at(rs, r) == (rs.is_positive(r) ? half : -half));
}

TEST_CASE("invalid specs") {
  const RootSystem rs('A', 2);
  const ContextPtr ctx = t_context(2);
  CHECK_THROWS_AS(build_coefficients(make_spec(rs, {{1, 0}}, {}, {{{1, 0}, FieldElement::constant(ctx, 1)}})),
                  PoleError);
  CHECK_THROWS_AS(build_coefficients(make_spec(rs, {}, pm({1, 0}))), InvalidInput);
  CHECK_THROWS_AS(build_coefficients(make_spec(rs, {{1, 0}}, pm({1, 0}), {{{1, 0}, FieldElement::constant(ctx, 2)}})),
                  InvalidInput);
  DynrSpec bad = make_spec(rs, {}, {});
  bad.pi = {{1, 0}, {1, 1}};
  CHECK_THROWS_AS(build_coefficients(bad), InvalidInput);
}

TEST_CASE("coefficient conditions") {
  const RootSystem rs('A', 2);
  const std::vector<Root> U = pm({1, 0});
  const auto fam = build_coefficients(make_spec(rs, {{1, 0}}, U));
  CHECK(check_coefficient_conditions(rs, fam, U).all_passed());

  // generic t: (d) on (a1, a2, -a1-a2) is x + 1/2 x' ... = -1/4 identically
  const auto gen = build_coefficients(make_spec(rs, {{1, 0}}, {}));
  const FieldElement x1 = gen.at(rs, {1, 0});
  CHECK((x1 * half + half * (-half) + (-half) * x1).to_string() == "-1/4");
  CHECK(check_coefficient_conditions(rs, gen, {}).all_passed());

  // flipping x at ±a2 keeps (a), (b) and breaks (c) on (a2, -a1-a2, a1)
  auto bad = fam;
  bad.x[rs.require({0, 1})] = -half;
  bad.x[rs.require({0, -1})] = half;
  const auto rep = check_coefficient_conditions(rs, bad, U);
  CHECK(rep.a.passed);
  CHECK(rep.b.passed);
  REQUIRE_FALSE(rep.c.passed);
  CHECK(std::set<Root>(rep.c.witness.begin(), rep.c.witness.end()) ==
        std::set<Root>{{0, 1}, {-1, -1}, {1, 0}});
  CHECK_FALSE(check_shift_form(rs, bad, U));

  auto bad_d = gen;
  bad_d.x[rs.require({0, 1})] = FieldElement(Rational(1, 3));
  bad_d.x[rs.require({0, -1})] = FieldElement(Rational(-1, 3));
  CHECK_FALSE(check_coefficient_conditions(rs, bad_d, {}).d.passed);
}

TEST_CASE("tensor assembly") {
  const RootSystem a1('A', 1);
  const LieAlgebra g = realize_lie_algebra(a1, std::vector<Root>{});
  const Tensor2 omega = build_casimir_tensor(g);
  CoefficientFamily zero{std::vector<FieldElement>(a1.size())};
  CHECK(coefficients_to_tensor(g, zero) == half * omega);

  const auto fam = build_coefficients(make_spec(a1, {}, {}));
  const Tensor2 r = coefficients_to_tensor(g, fam);
  const std::size_t x = g.root_vector({1}), y = g.root_vector({-1});
  Tensor2 expected = half * omega;
  expected.add_term({x, y}, half);
  expected.add_term({y, x}, -half);
  CHECK(r == expected);
  CHECK(r + flip(r) == omega);

  const RootSystem a2('A', 2);
  const LieAlgebra g2 = realize_lie_algebra(a2, pm({1, 0}));
  const Tensor2 b = coefficients_to_tensor(g2, build_coefficients(make_spec(a2, {{1, 0}}, pm({1, 0}))));
  std::vector<bool> m(g2.dim());
  for (std::size_t i = 0; i < g2.dim(); ++i) m[i] = !g2.in_u(i);
  CHECK(supported_on(antisymmetric_part(b), m));
}

TEST_CASE("M_Omega membership") {
  const RootSystem a2('A', 2);
  const LieAlgebra full = realize_lie_algebra(a2, a2.roots());
  CHECK(check_in_M_Omega(full, half * build_casimir_tensor(full)).member());
  CHECK_THROWS_AS(check_in_M_Omega(full, Tensor2()), QuasiUnitarityError);

  const RootSystem a1('A', 1);
  const LieAlgebra g = realize_lie_algebra(a1, std::vector<Root>{});
  CoefficientFamily zero{std::vector<FieldElement>(a1.size())};
  CHECK(check_coefficient_conditions(a1, zero, {}).all_passed());
  CHECK(check_in_M_Omega(g, coefficients_to_tensor(g, zero)).member());
}

TEST_CASE("property: coefficient verdict equals tensor verdict, valid and mutated") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    const RootSystem rs(f.type, f.rank);
    const LieAlgebra g = realize_lie_algebra(rs, f.U);
    const auto fam = build_coefficients(make_spec(rs, f.delta, f.U));
    const auto rep = check_coefficient_conditions(rs, fam, f.U);
    CHECK(rep.all_passed());
    CHECK(check_shift_form(rs, fam, f.U));
    CHECK(check_in_M_Omega(g, coefficients_to_tensor(g, fam)).member());

    // mutate one pair outside U keeping (a), (b)
    for (std::size_t i = 0; i < rs.size() / 2; ++i) {
      const Root& a = rs.root(i);
      if (std::find(f.U.begin(), f.U.end(), a) != f.U.end()) continue;
      auto bad = fam;
      bad.x[i] = bad.x[i] + FieldElement(1);
      bad.x[rs.require(-a)] = -bad.x[i];
      const bool coeff_ok = check_coefficient_conditions(rs, bad, f.U).all_passed();
      const bool tensor_ok = check_in_M_Omega(g, coefficients_to_tensor(g, bad)).member();
      CHECK(coeff_ok == tensor_ok);
    }
  }
}

TEST_CASE("recover_classification round trips") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    const RootSystem rs(f.type, f.rank);
    const DynrSpec spec = make_spec(rs, f.delta, f.U);
    const auto fam = build_coefficients(spec);
    const auto ws = recover_classification(rs, fam, f.U, t_context(f.rank));
    REQUIRE_FALSE(ws.empty());
    bool found_input = false;
    for (const auto& w : ws) {
      CHECK(w.round_trip);
      if (w.pi == spec.pi && w.delta == spec.delta) {
        found_input = true;
        for (const auto& [d, t] : spec.t) CHECK(w.t.at(d) == t);
      }
    }
    CHECK(found_input);
  }
  const RootSystem a2('A', 2);
  const auto flat = build_coefficients(make_spec(a2, {}, {}));
  const auto ws = recover_classification(a2, flat, {}, t_context(2));
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].delta.empty());
  // witnesses for A2, U = {±a1}: Pi and s_a1(Pi)
  const auto fam = build_coefficients(make_spec(a2, {{1, 0}}, pm({1, 0})));
  CHECK(recover_classification(a2, fam, pm({1, 0}), t_context(2)).size() == 2);

  CoefficientFamily bad = flat;
  bad.x[a2.require({1, 1})] = -half;
  bad.x[a2.require({-1, -1})] = half;
  CHECK_THROWS_AS(recover_classification(a2, bad, {}, t_context(2)), InvalidInput);
}

TEST_CASE("recover_b_from_initial") {
  const RootSystem a2('A', 2);
  const std::vector<Root> U = pm({1, 0});
  const LieAlgebra g = realize_lie_algebra(a2, U);
  const Tensor2 omega = build_casimir_tensor(g);
  CHECK(recover_b_from_initial(g, Tensor2(), half * omega) == half * omega);

  const std::size_t e = g.root_vector({1, 0}), f = g.root_vector({-1, 0});
  Tensor2 rho = half * omega;
  rho.add_term({e, f}, 3);
  rho.add_term({f, e}, -3);
  CHECK(recover_b_from_initial(g, Tensor2(), rho) == half * omega);

  const Tensor2 x = coefficients_to_tensor(g, build_coefficients(make_spec(a2, {{1, 0}}, U)));
  const Tensor2 pi_e = antisymmetric_part(x);
  const Tensor2 b = recover_b_from_initial(g, pi_e, half * omega);
  CHECK(b == x);
  CHECK(check_in_M_Omega(g, b).member());
  CHECK_THROWS_AS(recover_b_from_initial(g, pi_e, omega), QuasiUnitarityError);
}

TEST_CASE("Lagrangian subalgebra") {
  const RootSystem a2('A', 2);
  const std::vector<Root> U = pm({1, 0});
  const LieAlgebra g = realize_lie_algebra(a2, U);
  const auto rep = check_lagrangian(g, build_lagrangian(make_spec(a2, {{1, 0}}, U), g));
  CHECK(rep.dim == 8);
  CHECK(rep.isotropic);
  CHECK(rep.bracket_closed);
  CHECK(rep.intersection_dim == 4);
  CHECK(rep.all_passed());

  const LieAlgebra full = realize_lie_algebra(a2, a2.roots());
  const auto lf = build_lagrangian(make_spec(a2, a2.simple_roots(), a2.roots()), full);
  const auto rf = check_lagrangian(full, lf);
  CHECK(rf.all_passed());
  CHECK(rf.intersection_dim == 8);

  const RootSystem a1('A', 1);
  const LieAlgebra s = realize_lie_algebra(a1, std::vector<Root>{});
  const auto rs1 = check_lagrangian(s, build_lagrangian(make_spec(a1, {}, {}), s));
  CHECK(rs1.dim == 3);
  CHECK(rs1.all_passed());

  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    const RootSystem rs(f.type, f.rank);
    const LieAlgebra gg = realize_lie_algebra(rs, f.U);
    CHECK(check_lagrangian(gg, build_lagrangian(make_spec(rs, f.delta, f.U), gg)).all_passed());
  }
}

TEST_CASE("property: random specs with rational t pass both checks and round trip") {
  std::mt19937 rng(20261019);
  const std::vector<std::pair<char, int>> types{{'A', 2}, {'A', 3}, {'B', 2}, {'C', 2}, {'B', 3}, {'C', 3}};
  const std::vector<long> primes{2, 3, 5, 7};
  for (int trial = 0; trial < 12; ++trial) {
    const auto [type, rank] = types[rng() % types.size()];
    const RootSystem rs(type, rank);
    const auto simple = rs.simple_roots();
    std::vector<Root> delta, S;
    std::map<Root, FieldElement> bind;
    for (const auto& a : simple) {
      if (rng() % 2) continue;
      delta.push_back(a);
      if (rng() % 3 == 0) {
        S.push_back(a);
      } else {
        // t > 1 keeps every product over N \ U away from 1
        bind[a] = FieldElement(primes[rng() % primes.size()]);
      }
    }
    const std::vector<Root> U = levi_subset(rs, simple, S).roots;
    CAPTURE(rs.label());
    CAPTURE(trial);
    const DynrSpec spec = make_spec(rs, delta, U, bind);
    REQUIRE_NOTHROW(validate_spec(spec));
    const auto fam = build_coefficients(spec);
    CHECK(check_coefficient_conditions(rs, fam, U).all_passed());
    const LieAlgebra g = realize_lie_algebra(rs, U);
    CHECK(check_in_M_Omega(g, coefficients_to_tensor(g, fam)).member());
    const auto wit = recover_classification(rs, fam, U, t_context(rank));
    REQUIRE_FALSE(wit.empty());
    bool any = false;
    for (const auto& w : wit) any = any || w.round_trip;
    CHECK(any);
  }
}

// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "dynr/errors.hpp"
#include "dynr/tensor.hpp"

using namespace dynr;

namespace {

LieVector v(const LieAlgebra& g, const std::string& name) { return LieAlgebra::basis_vector(g.index(name)); }

// Brute-force CYB: act with the three embeddings on explicit elementary tensors.
Tensor3 cyb_oracle(const LieAlgebra& g, const Tensor2& r) {
  Tensor3 out;
  for (const auto& [p, a] : r.terms())
    for (const auto& [q, b] : r.terms()) {
      // r12 r13 - r13 r12 : first slot gets [b_p0, b_q0]
      const LieVector x = g.bracket(LieAlgebra::basis_vector(p[0]), LieAlgebra::basis_vector(q[0]));
      for (const auto& [m, c] : x) out.add_term({m, p[1], q[1]}, a * b * c);
      const LieVector y = g.bracket(LieAlgebra::basis_vector(p[1]), LieAlgebra::basis_vector(q[0]));
      for (const auto& [m, c] : y) out.add_term({p[0], m, q[1]}, a * b * c);
      const LieVector z = g.bracket(LieAlgebra::basis_vector(p[1]), LieAlgebra::basis_vector(q[1]));
      for (const auto& [m, c] : z) out.add_term({p[0], q[0], m}, a * b * c);
    }
  return out;
}

}  // namespace

TEST_CASE("sl2 brackets and trace form") {
  const LieAlgebra g = sl2();
  CHECK(g.bracket(v(g, "h"), v(g, "x")) == LieVector{{g.index("x"), 2}});
  CHECK(g.bracket(v(g, "h"), v(g, "y")) == LieVector{{g.index("y"), -2}});
  CHECK(g.bracket(v(g, "x"), v(g, "y")) == v(g, "h"));
  CHECK(g.pairing(v(g, "x"), v(g, "y")) == 1);
  CHECK(g.pairing(v(g, "h"), v(g, "h")) == 2);
  CHECK(g.pairing(v(g, "x"), v(g, "x")) == 0);
}

TEST_CASE("A1 realization agrees with sl2") {
  const LieAlgebra a1 = realize_lie_algebra(RootSystem('A', 1));
  const LieAlgebra g = sl2();
  REQUIRE(a1.dim() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(a1.bracket(i, j) == g.bracket(i, j));
      CHECK(a1.form()(i, j) == g.form()(i, j));
    }
}

TEST_CASE("two-dimensional nonabelian algebra from sl2") {
  const LieAlgebra g = sl2();
  LieVector b = v(g, "y"), a = v(g, "x");
  axpy(b, Rational(1, 2), v(g, "h"));
  axpy(a, Rational(-1, 2), v(g, "h"));
  LieVector expected = a;
  axpy(expected, -1, b);
  CHECK(g.bracket(b, a) == expected);
  const LieAlgebra v2 = nonabelian2();
  CHECK(v2.bracket(0, 1) == LieVector{{1, 1}, {0, -1}});
  CHECK_FALSE(v2.has_form());
}

TEST_CASE("invalid tables are rejected") {
  // [x,y] = x, [y,z] = y, [z,x] = z violates Jacobi
  CHECK_THROWS_AS(LieAlgebra({"x", "y", "z"}, {{0, 1, {{0, 1}}}, {1, 2, {{1, 1}}}, {2, 0, {{2, 1}}}}),
                  InvalidInput);
  Matrix<FieldElement> bad(3, 3);
  bad(0, 0) = 1;
  CHECK_THROWS_AS(LieAlgebra({"x", "y", "h"}, {{0, 1, {{2, 1}}}, {2, 0, {{0, 2}}}, {2, 1, {{1, -2}}}}, bad),
                  InvalidInput);
}

TEST_CASE("A2 marking with U = {±a1}") {
  const RootSystem rs('A', 2);
  const LieAlgebra g = realize_lie_algebra(rs, std::vector<Root>{{1, 0}, {-1, 0}});
  CHECK(g.u_basis().size() == 4);
  const auto m = g.m_basis();
  REQUIRE(m.size() == 4);
  for (auto i : g.u_basis())
    for (auto j : m)
      for (const auto& [k, c] : g.bracket(i, j)) CHECK_FALSE(g.in_u(k));
  CHECK_THROWS_AS(realize_lie_algebra(rs, std::vector<Root>{{1, 0}}), InvalidInput);
}

TEST_CASE("Casimir tensor") {
  const LieAlgebra g = sl2();
  const Tensor2 omega = build_casimir_tensor(g);
  Tensor2 expected = outer(v(g, "x"), v(g, "y")) + outer(v(g, "y"), v(g, "x"));
  expected += FieldElement(Rational(1, 2)) * outer(v(g, "h"), v(g, "h"));
  CHECK(omega == expected);

  const RootSystem rs('A', 2);
  const LieAlgebra a2 = realize_lie_algebra(rs, std::vector<Root>{{1, 0}, {-1, 0}});
  const Tensor2 om = build_casimir_tensor(a2);
  std::vector<std::size_t> all(a2.dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  CHECK(check_invariance(a2, om, all));
  CHECK(flip(om) == om);
  for (const Root& r : rs.roots()) CHECK(om.at({a2.root_vector(r), a2.root_vector(-r)}) == 1);
  for (const auto& [k, c] : om.terms()) CHECK(a2.in_u(k[0]) == a2.in_u(k[1]));
  CHECK_THROWS_AS(build_casimir_tensor(nonabelian2()), InvalidInput);
}

TEST_CASE("CYB") {
  const LieAlgebra g = sl2();
  CHECK(cyb(g, Tensor2()).is_zero());
  const Tensor2 r = FieldElement(Rational(1, 2)) * (outer(v(g, "x"), v(g, "y")) - outer(v(g, "y"), v(g, "x")));
  const Tensor3 c = cyb(g, r);
  CHECK_FALSE(c.is_zero());
  CHECK(c == cyb_oracle(g, r));
}

TEST_CASE("CYB(Omega/2) modulo u matches the structure-constant formula") {
  // for x_a = 0 on U and the A2 root data, CYB(Omega/2) ≡ 1/4 sum c_ab E_-a ⊗ E_-b ⊗ E_-c
  // over zero-sum triples a+b+c = 0 outside U, modulo u-slots
  const RootSystem rs('A', 2);
  const std::vector<Root> U{{1, 0}, {-1, 0}};
  const LieAlgebra g = realize_lie_algebra(rs, U);
  const Tensor2 half = FieldElement(Rational(1, 2)) * build_casimir_tensor(g);
  const Tensor3 lhs = reduce_mod_u(g, cyb(g, half));
  const auto st = chevalley_constants(rs, build_matrix_model(rs));
  Tensor3 rhs;
  for (const auto& [key, c] : st.constants) {
    const Root& a = rs.root(key.first);
    const Root& b = rs.root(key.second);
    const Root cc = -(a + b);
    rhs.add_term({g.root_vector(-a), g.root_vector(-b), g.root_vector(-cc)}, FieldElement(Rational(1, 4)) * c);
  }
  CHECK(lhs == reduce_mod_u(g, rhs));
  CHECK(lhs.is_zero());  // no zero-sum triple avoids U

  const LieAlgebra h_only = realize_lie_algebra(rs, std::vector<Root>{});
  const Tensor3 lhs2 =
      reduce_mod_u(h_only, cyb(h_only, FieldElement(Rational(1, 2)) * build_casimir_tensor(h_only)));
  Tensor3 rhs2;
  for (const auto& [key, c] : st.constants) {
    const Root& a = rs.root(key.first);
    const Root& b = rs.root(key.second);
    rhs2.add_term({h_only.root_vector(-a), h_only.root_vector(-b), h_only.root_vector(a + b)},
                  FieldElement(Rational(1, 4)) * c);
  }
  CHECK(lhs2 == rhs2);
  CHECK_FALSE(lhs2.is_zero());

  const LieAlgebra full = realize_lie_algebra(rs, rs.roots());
  CHECK(reduce_mod_u(full, cyb(full, FieldElement(Rational(1, 2)) * build_casimir_tensor(full))).is_zero());
}

TEST_CASE("Alt") {
  Tensor3 t;
  t.add_term({0, 1, 2}, 1);
  const Tensor3 a = alt(t);
  CHECK(a.at({0, 1, 2}) == 1);
  CHECK(a.at({2, 0, 1}) == 1);
  CHECK(a.at({1, 2, 0}) == 1);
  CHECK(a.size() == 3);
  CHECK(alt(a) == FieldElement(3) * a);
}

TEST_CASE("reduce_mod_u") {
  const RootSystem rs('A', 2);
  const LieAlgebra g = realize_lie_algebra(rs, std::vector<Root>{{1, 0}, {-1, 0}});
  const auto u = g.u_basis();
  const auto m = g.m_basis();
  Tensor3 t;
  t.add_term({u[0], m[0], m[1]}, 1);
  CHECK(reduce_mod_u(g, t).is_zero());
  Tensor3 s;
  s.add_term({m[0], m[1], m[2]}, 5);
  CHECK(reduce_mod_u(g, s) == s);
  CHECK_THROWS_AS(reduce_mod_u(sl2(), s), InvalidInput);
}

TEST_CASE("check_invariance") {
  const LieAlgebra g = sl2();
  const Tensor2 r = outer(v(g, "x"), v(g, "y")) - outer(v(g, "y"), v(g, "x"));
  CHECK(check_invariance(g, build_casimir_tensor(g), {0, 1, 2}));
  CHECK(check_invariance(g, r, {g.index("h")}));
  CHECK_FALSE(check_invariance(g, r, {0, 1, 2}));
}

TEST_CASE("Alt of the dynamical differential plus CYB vanishes for (1/lambda)(x⊗y - y⊗x)") {
  const LieAlgebra g = sl2();
  auto ctx = Context::make({"lambda"});
  const FieldElement lam = FieldElement::variable(ctx, "lambda");
  const Tensor2 r = lam.inverse() * (outer(v(g, "x"), v(g, "y")) - outer(v(g, "y"), v(g, "x")));
  const Tensor3 res = alt(dynamical_differential(r, {{g.index("h"), "lambda"}})) + cyb(g, r);
  CHECK(res.is_zero());
}

TEST_CASE("property: cyb is quadratic, reduction idempotent, oracle agreement") {
  const RootSystem rs('B', 2);
  const LieAlgebra g = realize_lie_algebra(rs, std::vector<Root>{{0, 1}, {0, -1}});
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> idx(0, g.dim() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 8; ++trial) {
    Tensor2 r;
    for (int k = 0; k < 6; ++k) r.add_term({idx(rng), idx(rng)}, coeff(rng));
    const FieldElement s(Rational(coeff(rng) + 5, 3));
    CHECK(cyb(g, s * r) == s * s * cyb(g, r));
    CHECK(cyb(g, r) == cyb_oracle(g, r));
    const Tensor3 c = cyb(g, r);
    CHECK(reduce_mod_u(g, reduce_mod_u(g, c)) == reduce_mod_u(g, c));
  }
}

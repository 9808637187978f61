// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "dynr/errors.hpp"
#include "dynr/twist.hpp"
#include "dynr/verma.hpp"

using namespace dynr;

namespace {

FieldElement lam() { return FieldElement::variable(twist_context(), "lambda"); }

// x acting on M(lambda) ⊗ V, computed straight from the action tables
VermaTensor x_on(const VermaData& M, const FiniteModule& V, const VermaTensor& t) {
  VermaTensor out(t.size(), ModuleVector(V.dim()));
  for (std::size_t k = 0; k < t.size(); ++k) {
    const ModuleVector xv = V.apply("x", t[k]);
    for (std::size_t i = 0; i < V.dim(); ++i) {
      out[k][i] += xv[i];
      if (k > 0) out[k - 1][i] += M.x_coefficient(k) * t[k][i];
    }
  }
  return out;
}

bool zero(const VermaTensor& t) {
  for (const auto& r : t)
    for (const auto& c : r)
      if (!c.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("Verma action tables") {
  const VermaData M = build_verma(6);
  CHECK(M.x_coefficient(1) == lam());
  CHECK(M.h_eigenvalue(0) == lam());
  CHECK(M.x_coefficient(0) == FieldElement(0));
  CHECK(M.relations_hold());
  CHECK(M.casimir_scalar());
}

TEST_CASE("finite modules") {
  for (int m : {0, 1, 2, 3, 4}) {
    const FiniteModule V(m);
    Rational tr = 0;
    for (std::size_t k = 0; k < V.dim(); ++k) tr += V.action("h")(k, k);
    CHECK(tr == 0);
    // [x, y] = h
    const auto& X = V.action("x");
    const auto& Y = V.action("y");
    CHECK(X * Y - Y * X == V.action("h"));
  }
  CHECK(FiniteModule(2).weight_space(0) == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(zero_weight_vector(FiniteModule(3)), InvalidInput);
}

TEST_CASE("intertwiners") {
  const VermaData M = build_verma(4);
  const FiniteModule triv(0), adj(2);
  const Intertwiner id = solve_intertwiner(M, triv, {FieldElement(1)});
  CHECK(id.image[0][0] == FieldElement(1));
  for (std::size_t k = 1; k < id.image.size(); ++k) CHECK(id.image[k][0].is_zero());

  const Intertwiner phi = solve_intertwiner(M, adj, zero_weight_vector(adj));
  // x(m_1 ⊗ w_1 + m_0 ⊗ v_1) = 0 forces w_1 = -(2/lambda) v_0
  CHECK(phi.image[1][0] == FieldElement(-2) / lam());
  CHECK(phi.image[1][1].is_zero());
  CHECK(phi.image[1][2].is_zero());
  CHECK(phi.expectation == zero_weight_vector(adj));
  CHECK(zero(x_on(M, adj, phi.image)));

  const FiniteModule V4(4);
  const Intertwiner phi4 = solve_intertwiner(build_verma(6), V4, zero_weight_vector(V4));
  CHECK(zero(x_on(build_verma(6), V4, phi4.image)));
  // w_2 = -x w_1 / (2(lambda-1)) with w_1 = -x v_2 / lambda; x v_2 = 6 v_1, x v_1 = 4 v_0
  CHECK(phi4.image[2][0] == FieldElement(12) / (lam() * (lam() - FieldElement(1))));

  CHECK_THROWS_AS(solve_intertwiner(M, adj, {FieldElement(1), FieldElement(0), FieldElement(0)}), InvalidInput);
  CHECK_THROWS_AS(solve_intertwiner(build_verma(2), adj, zero_weight_vector(adj)), InvalidInput);
}

TEST_CASE("composition agrees with the ABRR twist") {
  const std::vector<std::pair<int, int>> pairs{{0, 2}, {2, 0}, {2, 2}, {2, 4}, {4, 2}, {4, 4}};
  for (const auto& [a, b] : pairs) {
    const FiniteModule V(a), W(b);
    const OracleReport r = compose_and_extract(V, W, zero_weight_vector(V), zero_weight_vector(W));
    CHECK_MESSAGE(r.passed(), a, ",", b);
    CHECK(r.depth == V.dim() + W.dim());
  }
  // counit: trivial V returns u_psi
  const FiniteModule triv(0), adj(2);
  const OracleReport t = compose_and_extract(triv, adj, {FieldElement(1)}, zero_weight_vector(adj));
  CHECK(t.composed == zero_weight_vector(adj));
}

TEST_CASE("mutated twist is detected") {
  const FiniteModule adj(2);
  const OracleReport r =
      compose_and_extract(adj, adj, zero_weight_vector(adj), zero_weight_vector(adj), 0, {{1, FieldElement(2)}});
  CHECK_FALSE(r.passed());
}

TEST_CASE("twist coefficients have poles at integer shifts of lambda") {
  const FiniteModule V4(4);
  const OracleReport r = compose_and_extract(V4, V4, zero_weight_vector(V4), zero_weight_vector(V4));
  const FieldElement expected_den = lam() * (lam() - FieldElement(1));
  bool found = false;
  for (const auto& c : r.predicted) {
    if (c.is_zero()) continue;
    // every denominator divides lambda(lambda-1)
    CHECK((c * expected_den).denominator().is_constant());
    found = found || c.denominator().total_degree() == 2;
  }
  CHECK(found);
}

TEST_CASE("property: oracle on random pairs and scaled expectations") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const int a = 2 * static_cast<int>(rng() % 4), b = 2 * static_cast<int>(rng() % 4);
    const FiniteModule V(a), W(b);
    const FieldElement s(Rational(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 5) + 1));
    ModuleVector v0 = zero_weight_vector(V);
    for (auto& c : v0) c *= s;
    const OracleReport r = compose_and_extract(V, W, v0, zero_weight_vector(W));
    CAPTURE(a);
    CAPTURE(b);
    CHECK(r.passed());
    // linearity in the expectation value
    const OracleReport base = compose_and_extract(V, W, zero_weight_vector(V), zero_weight_vector(W));
    for (std::size_t i = 0; i < r.composed.size(); ++i) CHECK(r.composed[i] == s * base.composed[i]);
  }
}

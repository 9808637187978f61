// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynr/field.hpp"
#include "dynr/lie.hpp"
#include "dynr/rootsys.hpp"
#include "dynr/tensor.hpp"

namespace dynr {

/// Classification data (Pi, Delta, U, t) for one family of coefficients.
///
/// `t` assigns to each delta in Delta the parameter t_delta standing for
/// exp(2 delta(h)); it extends multiplicatively to the Levi set N.
struct DynrSpec {
  RootSystem rs;
  std::vector<Root> pi;
  std::vector<Root> delta;
  std::vector<Root> U;
  std::map<Root, FieldElement> t;
};

/// Spec over the Bourbaki simple system. Unbound t_delta default to 1 when
/// ±delta lies in U and to the free symbol "t<k>" (k the simple-root index) otherwise.
DynrSpec make_spec(const RootSystem& rs, const std::vector<Root>& delta, const std::vector<Root>& U,
                   const std::map<Root, FieldElement>& bindings = {});

/// Context holding the symbols t1..t_rank.
ContextPtr t_context(int rank);

/// Throws InvalidInput unless Pi is a simple system, Delta ⊆ Pi, U is reductive,
/// U ⊆ N and t_alpha = 1 on U; throws PoleError if t_alpha = 1 for some alpha in N \ U.
void validate_spec(const DynrSpec& spec);

RootSubset levi_set(const DynrSpec& spec);

/// t_alpha for alpha in N.
FieldElement t_of(const DynrSpec& spec, const Root& alpha);

/// x_alpha aligned with rs.roots().
struct CoefficientFamily {
  std::vector<FieldElement> x;

  const FieldElement& at(const RootSystem& rs, const Root& alpha) const { return x.at(rs.require(alpha)); }
  bool operator==(const CoefficientFamily& o) const { return x == o.x; }
};

CoefficientFamily build_coefficients(const DynrSpec& spec);

struct ConditionResult {
  bool passed = true;
  std::vector<Root> witness;  // violating roots, empty on pass
  FieldElement residual;      // value that should have vanished
};

struct ConditionReport {
  ConditionResult a, b, c, d;
  bool all_passed() const { return a.passed && b.passed && c.passed && d.passed; }
};

ConditionReport check_coefficient_conditions(const RootSystem& rs, const CoefficientFamily& fam,
                                             const std::vector<Root>& U);

/// x_{alpha+beta} = x_alpha for alpha in R \ U, beta in U, alpha+beta in R.
bool check_shift_form(const RootSystem& rs, const CoefficientFamily& fam, const std::vector<Root>& U);

/// sum x_alpha E_alpha ⊗ E_-alpha + Omega/2.
Tensor2 coefficients_to_tensor(const LieAlgebra& g, const CoefficientFamily& fam);

struct MembershipReport {
  bool antisymmetric = false;   // b - Omega/2 ∈ ∧²g
  bool m_supported = false;     // b - Omega/2 ∈ m ⊗ m
  bool u_invariant = false;
  bool cyb_vanishes = false;    // CYB(b) = 0 in (g/u)^⊗3
  Tensor3 reduced_cyb;
  bool member() const { return antisymmetric && m_supported && u_invariant && cyb_vanishes; }
};

/// Throws QuasiUnitarityError if b + b^21 != Omega.
MembershipReport check_in_M_Omega(const LieAlgebra& g, const Tensor2& b);

struct ClassificationWitness {
  std::vector<Root> pi;
  std::vector<Root> delta;
  std::map<Root, FieldElement> t;
  bool round_trip = false;  // build_coefficients reproduces the family
};

/// All simple systems Pi with P = {x != -1/2} = R_+(Pi) ∪ N(Delta), with recovered t.
/// Throws InvalidInput if P is not parabolic.
std::vector<ClassificationWitness> recover_classification(const RootSystem& rs, const CoefficientFamily& fam,
                                                          const std::vector<Root>& U,
                                                          const ContextPtr& ctx);

/// b = Omega/2 + pi_e + (m-projection of rho - Omega/2).
Tensor2 recover_b_from_initial(const LieAlgebra& g, const Tensor2& pi_e, const Tensor2& rho);

struct LagrangianData {
  std::vector<std::vector<FieldElement>> basis;  // vectors in g × g, length 2 dim g
};

struct LagrangianReport {
  std::size_t dim = 0, dim_g = 0;
  bool isotropic = false;
  bool bracket_closed = false;
  std::size_t intersection_dim = 0, u_dim = 0;
  bool contains_u_diag = false;
  bool all_passed() const {
    return dim == dim_g && isotropic && bracket_closed && intersection_dim == u_dim && contains_u_diag;
  }
};

/// l = {(x,y) ∈ p_- × p_+ : theta(p_-(x)) = p_+(y)}; g must be realized from spec.rs with U marked.
LagrangianData build_lagrangian(const DynrSpec& spec, const LieAlgebra& g);
LagrangianReport check_lagrangian(const LieAlgebra& g, const LagrangianData& l);

}  // namespace dynr

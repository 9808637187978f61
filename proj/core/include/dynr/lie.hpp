// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynr/field.hpp"
#include "dynr/linalg.hpp"
#include "dynr/rootsys.hpp"

namespace dynr {

/// Sparse vector in the basis of a Lie algebra, keyed by basis index.
using LieVector = std::map<std::size_t, FieldElement>;

void axpy(LieVector& y, const FieldElement& a, const LieVector& x);

/// Finite-dimensional Lie algebra with a chosen basis and bracket table.
///
/// The invariant form is optional (solvable examples have none); when present
/// it is checked for symmetry and ad-invariance on construction. An optional
/// marking splits the basis into u and a complement m.
class LieAlgebra {
 public:
  struct Bracket {
    std::size_t i, j;
    LieVector value;
  };

  /// Build from the brackets [b_i, b_j] for i < j (the rest follows by
  /// antisymmetry). Throws InvalidInput on Jacobi or invariance failure.
  LieAlgebra(std::vector<std::string> names, const std::vector<Bracket>& brackets,
             std::optional<Matrix<FieldElement>> form = std::nullopt);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t index(const std::string& name) const;

  const LieVector& bracket(std::size_t i, std::size_t j) const { return table_[i][j]; }
  LieVector bracket(const LieVector& a, const LieVector& b) const;

  bool has_form() const { return form_.has_value(); }
  const Matrix<FieldElement>& form() const;
  FieldElement pairing(const LieVector& a, const LieVector& b) const;

  /// Mark u as the span of the listed basis elements, m as the span of the rest.
  /// Requires u to be a subalgebra and [u, m] ⊆ m.
  void mark(const std::vector<std::size_t>& u);
  bool marked() const { return !in_u_.empty(); }
  bool in_u(std::size_t i) const;
  std::vector<std::size_t> u_basis() const;
  std::vector<std::size_t> m_basis() const;

  /// Root data, present for algebras realized from a root system.
  const std::optional<RootSystem>& root_system() const { return rs_; }
  /// Basis index of E_alpha.
  std::size_t root_vector(const Root& alpha) const;
  /// Basis indices of the Cartan elements h_1..h_n.
  const std::vector<std::size_t>& cartan() const { return cartan_; }

  static LieVector basis_vector(std::size_t i) { return {{i, FieldElement(1)}}; }

 private:
  friend LieAlgebra realize_lie_algebra(const RootSystem&, const std::optional<std::vector<Root>>&);

  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<LieVector>> table_;
  std::optional<Matrix<FieldElement>> form_;
  std::vector<bool> in_u_;
  std::optional<RootSystem> rs_;
  std::vector<std::size_t> cartan_;
};

/// Basis: E_alpha for alpha in R (positive first), then h_1..h_n. With U given,
/// u = h + sum over U of g_alpha is marked.
LieAlgebra realize_lie_algebra(const RootSystem& rs,
                               const std::optional<std::vector<Root>>& U = std::nullopt);

/// sl(2) with basis x, y, h and the trace form <x,y> = 1, <h,h> = 2.
LieAlgebra sl2();

/// Two-dimensional nonabelian algebra, basis b, a with [b,a] = a - b.
LieAlgebra nonabelian2();

/// Name used for the basis vector of a root, e.g. "E[1,0]".
std::string root_vector_name(const Root& alpha);

}  // namespace dynr

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "dynr/field.hpp"
#include "dynr/linalg.hpp"

namespace dynr {

using ModuleVector = std::vector<FieldElement>;

/// Irreducible sl(2)-module of highest weight m: y v_k = v_{k+1},
/// x v_{k+1} = (k+1)(m-k) v_k, h v_k = (m-2k) v_k.
class FiniteModule {
 public:
  explicit FiniteModule(int m);

  int highest_weight() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_ + 1); }
  int weight(std::size_t k) const { return m_ - 2 * static_cast<int>(k); }
  /// Basis indices of V[mu].
  std::vector<std::size_t> weight_space(int mu) const;
  /// Action matrix of "x", "y" or "h".
  const Matrix<Rational>& action(const std::string& gen) const;
  ModuleVector apply(const std::string& gen, const ModuleVector& v) const;

 private:
  int m_;
  Matrix<Rational> x_, y_, h_;
};

/// Truncation m_0..m_K of the Verma module M(lambda), m_k = y^k 1_lambda.
struct VermaData {
  std::size_t depth = 0;

  FieldElement h_eigenvalue(std::size_t k) const;      // lambda - 2k
  FieldElement x_coefficient(std::size_t k) const;     // x m_k = k(lambda-k+1) m_{k-1}
  /// Relation residuals on m_k for k <= K-1, and c - lambda(lambda+2)/2 on every m_k.
  bool relations_hold() const;
  bool casimir_scalar() const;
};

VermaData build_verma(std::size_t depth);

/// Element of M(lambda) ⊗ V: row k holds the V-component at m_k.
using VermaTensor = std::vector<ModuleVector>;

struct Intertwiner {
  int module_weight = 0;
  VermaTensor image;           // Phi(1_lambda)
  ModuleVector expectation;    // component at m_0
};

/// Unique Phi: M(lambda) -> M(lambda) ⊗ V with expectation v0 ∈ V[0].
/// Throws InvalidInput for v0 outside V[0] or insufficient depth.
Intertwiner solve_intertwiner(const VermaData& verma, const FiniteModule& V, const ModuleVector& v0);

struct OracleReport {
  int V = 0, W = 0;
  std::size_t depth = 0;
  ModuleVector composed;    // u_{(phi⊗id)psi}, index i*dim W + j
  ModuleVector predicted;   // J(lambda)_{V⊗W}(u_phi ⊗ u_psi) at hbar = 1
  ModuleVector difference;
  bool passed() const;
};

/// J(lambda) at hbar = 1 acting on a vector of V ⊗ W; `scale[n]` multiplies the n-th summand.
ModuleVector abrr_action(const FiniteModule& V, const FiniteModule& W, const ModuleVector& u,
                         const std::map<int, FieldElement>& scale = {});

/// Compose the intertwiners for (V, v0) and (W, w0) and compare with the ABRR prediction.
/// Depth defaults to dim V + dim W.
OracleReport compose_and_extract(const FiniteModule& V, const FiniteModule& W, const ModuleVector& v0,
                                 const ModuleVector& w0, std::size_t depth = 0,
                                 const std::map<int, FieldElement>& scale = {});

/// Zero-weight basis vector of V (m even).
ModuleVector zero_weight_vector(const FiniteModule& V);

}  // namespace dynr

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "dynr/field.hpp"
#include "dynr/tensor.hpp"
#include "dynr/uea.hpp"

namespace dynr {

/// Context with the dynamical variable "lambda" and the deformation parameter "hbar".
ContextPtr twist_context();

/// Truncated series sum_{k<=N} hbar^k J_k with J_k in U(g)^{⊗slots} over Q(lambda).
struct TwistSeries {
  UEAPtr alg;
  std::size_t slots = 2;
  std::vector<UEATensor> orders;  // orders[k] = J_k

  std::size_t order() const { return orders.size() - 1; }
  static TwistSeries trivial(UEAPtr alg, std::size_t N, std::size_t slots = 2);
};

/// ABRR twist for (sl(2), C h) truncated at hbar^N. `scale[n]` multiplies the
/// n-th summand (used for mutation controls).
TwistSeries abrr_twist(std::size_t N, const std::map<int, FieldElement>& scale = {});

/// J(lambda - hbar h^{(3)})^{12} as a three-slot series.
TwistSeries shift_twist(const TwistSeries& J, std::size_t N);

struct TwistReport {
  std::vector<UEATensor> residuals;  // per hbar order
  std::vector<bool> counit_left, counit_right;
  bool passed() const;
};

/// J^{12,3} J(lambda - hbar h^{(3)})^{12} - J^{1,23} J^{23} per order, plus counit checks.
TwistReport check_dynamical_twist(const TwistSeries& J, std::size_t N);

/// J^{12,3} J^{12} - J^{1,23} J^{23} per order, plus counit checks.
TwistReport check_nondynamical_twist(const TwistSeries& J, std::size_t N);

/// Convert a two-slot element of degree one in each slot to a tensor over the Lie algebra.
Tensor2 to_lie_tensor(const UEATensor& t);

/// r = j - j^21 with j the hbar^1 coefficient of J(lambda/hbar) (J summed at hbar = 1).
Tensor2 classical_limit_r(const TwistSeries& J);

/// Alt(h ⊗ dr/dlambda) + CYB(r) for sl(2) with coordinate lambda dual to h.
Tensor3 check_cdybe(const LieAlgebra& g, const Tensor2& r);

/// True iff every coefficient commutes with the diagonal action of `gen`.
bool check_weight_zero(const TwistSeries& J, const std::string& gen);

}  // namespace dynr

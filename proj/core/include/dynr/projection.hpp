// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "dynr/twist.hpp"
#include "dynr/uea.hpp"

namespace dynr {

/// g = h ⊕ v with PBW order (v generators, then h generators).
struct SplittingData {
  UEAPtr ambient;                    // U(g) in its original generators
  UEAPtr split;                      // U(g) in the generators v..., h...
  std::vector<std::string> v_gens;
  std::vector<std::string> h_gens;
  std::vector<LieVector> vectors;    // split generators in the ambient basis
};

/// sl(2) = C h ⊕ v with v = g_s b_+ g_s^{-1}, g_s = [[1,0],[s,1]]:
/// b = y + h/(2s), a = x - (s/2) h, c = -h/(2s). s = 1 is the standard example.
SplittingData split_basis_sl2(const Rational& s = 1);

/// Brackets of the splitting: v closed, h abelian, complementary. Throws InvalidInput
/// when violated.
void validate_splitting(const SplittingData& sp);

/// Image of J under the projection onto Uv ⊗ Uv along (Ug·h ⊗ Ug) + (Ug ⊗ Ug·h).
/// Throws InvalidInput if some coefficient of J is not h-invariant.
TwistSeries project_twist(const TwistSeries& J, const SplittingData& sp);

/// 1 + sum_n (-1)^n hbar^n v_n / (n! lambda(lambda-hbar)...(lambda-(n-1)hbar)) with
/// v_n = b(b+1)...(b+n-1) ⊗ a(a+1)...(a+n-1), expanded to hbar^N.
TwistSeries closed_form_jv(std::size_t N, const SplittingData& sp);
TwistSeries closed_form_jv(std::size_t N);

struct RisingFactorialResult {
  UEAElement brute;    // projection of y^n computed by straightening
  UEAElement closed;   // b(b+1)...(b+n-1)
  bool equal = false;
};

RisingFactorialResult rising_factorial_projection(int n, const SplittingData& sp);
RisingFactorialResult rising_factorial_projection(int n);

/// c b^n - b((b+1)^n - b^n) - (b+1)^n c in the split algebra.
UEAElement cb_identity_residual(int n, const SplittingData& sp);

/// J_h = J - J_v, both in the split generators.
TwistSeries complement_twist(const TwistSeries& J, const SplittingData& sp);

/// Per hbar order: projection of each side of the dynamical twist equation minus
/// the corresponding side of the twist equation for J_v. Entry k holds
/// (left residual) and (right residual).
std::vector<std::pair<UEATensor, UEATensor>> projection_residuals(const TwistSeries& J,
                                                                  const SplittingData& sp, std::size_t N);

}  // namespace dynr

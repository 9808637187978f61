// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dynr/field.hpp"
#include "dynr/lie.hpp"
#include "dynr/twist.hpp"
#include "dynr/uea.hpp"

namespace dynr {

/// Polynomial in the matrix coordinates g11, g12, g21, g22 of SL(2), reduced
/// modulo det = 1 by rewriting g11*g22 -> g12*g21 + 1. Coefficients live in
/// the twist context (lambda, hbar).
class OrbitFunction {
 public:
  using Exps = std::array<int, 4>;  // powers of g11, g12, g21, g22

  OrbitFunction() = default;
  explicit OrbitFunction(const FieldElement& c);
  static OrbitFunction coordinate(int k, int l);  // g_kl, 1-based

  const std::map<Exps, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  OrbitFunction& operator+=(const OrbitFunction& o);
  OrbitFunction& operator-=(const OrbitFunction& o);
  friend OrbitFunction operator+(OrbitFunction a, const OrbitFunction& b) { return a += b; }
  friend OrbitFunction operator-(OrbitFunction a, const OrbitFunction& b) { return a -= b; }
  friend OrbitFunction operator*(const OrbitFunction& a, const OrbitFunction& b);
  friend OrbitFunction operator*(const FieldElement& s, const OrbitFunction& f);
  OrbitFunction operator-() const { return FieldElement(-1) * *this; }
  bool operator==(const OrbitFunction& o) const { return (*this - o).is_zero(); }

  /// Partial derivative in g_kl of the normal-form representative.
  OrbitFunction derivative(int k, int l) const;
  /// Value at a matrix with det 1 (entries are rationals).
  FieldElement at(const std::array<Rational, 4>& g) const;
  OrbitFunction evaluate(const std::map<std::string, FieldElement>& bindings) const;

  std::string to_string() const;

 private:
  void add_reduced(Exps e, const FieldElement& c);
  std::map<Exps, FieldElement> terms_;
};

/// f_a(g) = (lambda/2) Tr(g h adj(g) a) for a in sl(2) (basis x, y, h).
OrbitFunction orbit_function(const LieVector& a);
OrbitFunction orbit_function(const std::string& name);

/// Left-invariant action: v acts by f -> sum (g v)_kl df/dg_kl; PBW monomials act
/// by composition with the rightmost generator applied first.
OrbitFunction invariant_derivative(const UEAElement& u, const OrbitFunction& f);

/// Right-invariant field f -> sum (v g)_kl df/dg_kl (infinitesimal left translation).
OrbitFunction right_invariant_derivative(const LieVector& v, const OrbitFunction& f);

/// f1 ⋆ f2 at hbar = 1 with symbolic lambda. Throws InvalidInput unless
/// ->h annihilates both inputs. `scale[n]` multiplies the n-th summand.
OrbitFunction star_product(const OrbitFunction& f1, const OrbitFunction& f2,
                           const std::map<int, FieldElement>& scale = {});

/// hbar-formal f1 ⋆ f2, coefficients of hbar^0..hbar^N.
std::vector<OrbitFunction> star_product_series(const OrbitFunction& f1, const OrbitFunction& f2,
                                               std::size_t N);

/// m(->J (f1 ⊗ f2)) for a two-slot twist series, per hbar order (no h shortcut).
std::vector<OrbitFunction> apply_twist(const TwistSeries& J, const OrbitFunction& f1, const OrbitFunction& f2);

struct OrbitIdentityReport {
  std::vector<std::pair<std::string, OrbitFunction>> fafb_residuals;        // all 9 ordered pairs
  std::vector<std::pair<std::string, OrbitFunction>> commutator_residuals;  // f_a⋆f_b - f_b⋆f_a - f_[a,b]
  OrbitFunction casimir_value;                                             // F(c)
  OrbitFunction casimir_residual;                                          // F(c) - lambda(lambda+2)/2
  std::size_t associativity_triples = 0;
  std::vector<std::string> associativity_failures;
  std::vector<std::pair<std::string, OrbitFunction>> quasiclassical_residuals;
  std::vector<std::pair<std::string, OrbitFunction>> equivariance_residuals;
  std::vector<std::pair<std::string, OrbitFunction>> twist_agreement_residuals;
  std::vector<std::size_t> graded_dims_orbit, graded_dims_quotient;  // filtered, degrees 0..4
  bool passed() const;
};

OrbitIdentityReport verify_orbit_identities();

/// Dimensions of the span of f-monomials of degree <= d, d = 0..max_degree.
std::vector<std::size_t> orbit_filtered_dims(int max_degree);
/// Dimensions of the degree <= d part of U(sl2)/(c - lambda(lambda+2)/2).
std::vector<std::size_t> quotient_filtered_dims(int max_degree);

}  // namespace dynr

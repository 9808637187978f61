// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace dynr {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector; its length is the number of variables of the ring.
using Monomial = std::vector<int>;

/// Graded lexicographic order, larger monomials first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept sorted by decreasing graded-lex order, so the first term is
/// the leading term. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index, int power = 1);
  static Polynomial monomial(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational constant_term() const;

  int total_degree() const;
  /// Degree in one variable; -1 for the zero polynomial.
  int degree(std::size_t var) const;
  bool involves(std::size_t var) const { return degree(var) > 0; }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  Polynomial pow(unsigned n) const;
  Polynomial derivative(std::size_t var) const;

  /// Coefficients with respect to `var`: power -> polynomial free of `var`.
  std::map<int, Polynomial> coefficients_in(std::size_t var) const;
  static Polynomial from_coefficients(std::size_t nvars, std::size_t var,
                                      const std::map<int, Polynomial>& coeffs);

  /// Divide by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  /// Positive rational c such that this / c has coprime integer coefficients.
  Rational content() const;

  /// Integer-coefficient rendering using the given variable names.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Exact quotient a / b; throws NotDivisible if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor over Q; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace dynr

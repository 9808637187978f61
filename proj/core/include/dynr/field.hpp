// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dynr/polynomial.hpp"

namespace dynr {

/// Ordered list of formal parameter names shared by all elements of one computation.
class Context {
 public:
  static std::shared_ptr<const Context> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws UnknownParameter.
  std::size_t require(std::string_view name) const;

 private:
  explicit Context(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const Context>;

/// Element of Q(p1, ..., pk): a reduced fraction of polynomials.
///
/// Invariants: gcd(numerator, denominator) = 1, the denominator is monic under
/// graded-lex order, and zero is stored as 0/1. An element without a context is
/// a plain rational number; it combines freely with elements of any context.
class FieldElement {
 public:
  FieldElement() : num_(0), den_(Polynomial::constant(0, 1)) {}
  FieldElement(long value) : FieldElement(Rational(value)) {}  // NOLINT
  FieldElement(const Rational& value);                         // NOLINT

  static FieldElement constant(const ContextPtr& ctx, const Rational& value);
  static FieldElement variable(const ContextPtr& ctx, std::string_view name);
  static FieldElement fraction(const ContextPtr& ctx, Polynomial num, Polynomial den);
  /// Parse the serialization grammar: integers, names, + - * / ^ and parentheses.
  static FieldElement parse(const ContextPtr& ctx, std::string_view text);

  const ContextPtr& context() const { return ctx_; }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant element; throws if parameters occur.
  Rational constant_value() const;

  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);
  FieldElement& operator*=(const Rational& c);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }

  FieldElement inverse() const;
  FieldElement pow(int n) const;

  FieldElement differentiate(std::string_view var) const;
  /// Substitute parameters by field elements of the same context.
  FieldElement evaluate(const std::map<std::string, FieldElement>& bindings) const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& f) {
    return os << f.to_string();
  }

 private:
  FieldElement(ContextPtr ctx, Polynomial num, Polynomial den, bool canonical);
  void canonicalize();
  /// Bring a context-free constant into `ctx`.
  FieldElement promoted(const ContextPtr& ctx) const;
  static ContextPtr common_context(const FieldElement& a, const FieldElement& b);

  ContextPtr ctx_;
  Polynomial num_;
  Polynomial den_;
};

/// Truncated Taylor coefficients c_0..c_N of f in one variable.
struct SeriesCoefficients {
  std::string variable;
  std::vector<FieldElement> coefficients;

  std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// Expand f around var = 0 to order N; throws PoleError if var divides the denominator.
SeriesCoefficients series_expand(const FieldElement& f, std::string_view var, std::size_t order);

/// Sum c_k var^k of a truncated series.
FieldElement resum(const ContextPtr& ctx, const SeriesCoefficients& s);

}  // namespace dynr

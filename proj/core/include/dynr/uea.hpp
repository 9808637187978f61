// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dynr/field.hpp"
#include "dynr/lie.hpp"
#include "dynr/linalg.hpp"

namespace dynr {

/// PBW exponent vector, indexed by generator position.
using Exponent = std::vector<int>;

/// Universal enveloping algebra of a Lie algebra with rational structure
/// constants, in PBW normal form for a fixed generator order.
class UEA : public std::enable_shared_from_this<UEA> {
 public:
  using RationalPoly = std::map<Exponent, Rational>;

  /// `order` lists basis names of g, leftmost generator first.
  static std::shared_ptr<const UEA> make(LieAlgebra g, const std::vector<std::string>& order, int degree_cap = 16);

  /// Enveloping algebra of the same Lie algebra in a new basis. `vectors[i]` is
  /// the new generator names[i] expanded in the basis of this->lie(); the PBW
  /// order of the result is `names`. Throws SingularSystem if not a basis.
  std::shared_ptr<const UEA> change_basis(const std::vector<std::string>& names,
                                          const std::vector<LieVector>& vectors) const;

  const LieAlgebra& lie() const { return g_; }
  std::size_t ngens() const { return order_.size(); }
  const std::string& gen_name(std::size_t pos) const { return g_.name(order_[pos]); }
  std::vector<std::string> gen_names() const;
  std::size_t position(const std::string& name) const;
  int degree_cap() const { return cap_; }

  /// Normal form of m1 * m2.
  RationalPoly multiply(const Exponent& m1, const Exponent& m2) const;

  /// Basis-change data, present for algebras built by change_basis.
  const std::shared_ptr<const UEA>& parent() const { return parent_; }
  /// Generators of this algebra expanded in parent generators (by position).
  const std::vector<std::map<std::size_t, Rational>>& to_parent() const { return to_parent_; }
  /// Parent generators expanded in generators of this algebra (by position).
  const std::vector<std::map<std::size_t, Rational>>& from_parent() const { return from_parent_; }

 private:
  UEA(LieAlgebra g, std::vector<std::size_t> order, int cap);
  RationalPoly times_generator(const Exponent& m, std::size_t j) const;

  LieAlgebra g_;
  std::vector<std::size_t> order_;          // position -> basis index
  std::vector<std::size_t> pos_of_basis_;   // basis index -> position
  // bracket_[p][q] = [gen p, gen q] by positions
  std::vector<std::vector<std::map<std::size_t, Rational>>> bracket_;
  int cap_;
  std::shared_ptr<const UEA> parent_;
  std::vector<std::map<std::size_t, Rational>> to_parent_, from_parent_;

  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<Exponent, std::size_t>, RationalPoly> memo_;
};

using UEAPtr = std::shared_ptr<const UEA>;

/// Element of the k-fold tensor power of U(g), PBW normal form in every slot.
/// With one slot this is an element of U(g).
class UEATensor {
 public:
  using Key = std::vector<Exponent>;
  using TermMap = std::map<Key, FieldElement>;

  UEATensor(UEAPtr alg, std::size_t slots) : alg_(std::move(alg)), slots_(slots) {}

  static UEATensor scalar(UEAPtr alg, std::size_t slots, const FieldElement& c);
  static UEATensor generator(UEAPtr alg, const std::string& name);
  static UEATensor monomial(UEAPtr alg, Key key, const FieldElement& c = FieldElement(1));
  /// Lie algebra element as a degree-one element of U(g).
  static UEATensor from_lie(UEAPtr alg, const LieVector& v);

  const UEAPtr& algebra() const { return alg_; }
  std::size_t slots() const { return slots_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coefficient(const Key& k) const;
  int degree() const;

  void add_term(const Key& k, const FieldElement& c);

  UEATensor& operator+=(const UEATensor& o);
  UEATensor& operator-=(const UEATensor& o);
  friend UEATensor operator+(UEATensor a, const UEATensor& b) { return a += b; }
  friend UEATensor operator-(UEATensor a, const UEATensor& b) { return a -= b; }
  friend UEATensor operator*(const FieldElement& s, const UEATensor& t);
  UEATensor operator-() const { return FieldElement(-1) * *this; }
  bool operator==(const UEATensor& o) const;
  bool operator!=(const UEATensor& o) const { return !(*this == o); }

  /// Slot-wise PBW product.
  friend UEATensor operator*(const UEATensor& a, const UEATensor& b);

  UEATensor pow(int n) const;
  UEATensor differentiate(const std::string& var) const;
  UEATensor evaluate(const std::map<std::string, FieldElement>& bindings) const;

  /// Tensor product a ⊗ b (slots concatenated).
  friend UEATensor tensor(const UEATensor& a, const UEATensor& b);

  std::string to_string() const;

 private:
  void check_compatible(const UEATensor& o) const;

  UEAPtr alg_;
  std::size_t slots_;
  TermMap terms_;
};

using UEAElement = UEATensor;

UEATensor pbw_multiply(const UEATensor& a, const UEATensor& b);

/// Apply the coproduct in slot `slot`, producing slots + 1 slots.
UEATensor coproduct(const UEATensor& u, std::size_t slot = 0);

/// Apply the counit in slot `slot`, producing slots - 1 slots (a scalar for one slot
/// is returned as a zero-slot tensor; see counit_value).
UEATensor counit(const UEATensor& u, std::size_t slot);
FieldElement counit_value(const UEATensor& u);

/// Insert 1 as a new slot at position `at`.
UEATensor insert_unit(const UEATensor& u, std::size_t at);

/// Rewrite u in the generators of `target`, which must be a change_basis child or
/// parent of u's algebra.
UEATensor change_generators(const UEATensor& u, const UEAPtr& target);

/// Projection along U(g)·k, where k is spanned by the listed generators; they must be
/// the rightmost generators of the PBW order. Drops monomials that use them.
UEATensor project_along_ideal(const UEATensor& u, const std::vector<std::string>& ideal_gens);

/// The projection (·)_0 onto U(h) along n_- U(g) + U(g) n_+; the PBW order must be
/// (n_-, h, n_+). Keeps monomials free of n_- and n_+ generators.
UEATensor project_zero(const UEATensor& u, const std::vector<std::string>& n_minus,
                       const std::vector<std::string>& n_plus);

/// sl(2) enveloping algebra with PBW order (y, h, x).
UEAPtr sl2_uea();

}  // namespace dynr

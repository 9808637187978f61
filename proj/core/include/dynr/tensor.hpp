// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dynr/field.hpp"
#include "dynr/lie.hpp"

namespace dynr {

/// Sparse rank-K tensor over the basis of a Lie algebra, keyed by basis-index tuples.
template <std::size_t K>
class Tensor {
 public:
  using Key = std::array<std::size_t, K>;
  using TermMap = std::map<Key, FieldElement>;

  Tensor() = default;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FieldElement at(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? FieldElement() : it->second;
  }

  void add_term(const Key& k, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const FieldElement& s, const Tensor& t) {
    Tensor r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : t.terms_) r.add_term(k, s * c);
    return r;
  }
  Tensor operator-() const { return FieldElement(-1) * *this; }
  bool operator==(const Tensor& o) const { return (*this - o).is_zero(); }

  /// Slot permutation: result slot i holds source slot perm[i].
  Tensor permuted(const std::array<std::size_t, K>& perm) const {
    Tensor r;
    for (const auto& [k, c] : terms_) {
      Key nk;
      for (std::size_t i = 0; i < K; ++i) nk[i] = k[perm[i]];
      r.add_term(nk, c);
    }
    return r;
  }

  Tensor differentiate(const std::string& var) const {
    Tensor r;
    for (const auto& [k, c] : terms_) r.add_term(k, c.differentiate(var));
    return r;
  }

  Tensor evaluate(const std::map<std::string, FieldElement>& bindings) const {
    Tensor r;
    for (const auto& [k, c] : terms_) r.add_term(k, c.evaluate(bindings));
    return r;
  }

 private:
  TermMap terms_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

/// t^21
Tensor2 flip(const Tensor2& t);
Tensor2 symmetric_part(const Tensor2& t);
Tensor2 antisymmetric_part(const Tensor2& t);

/// Elementary tensor product of two Lie vectors.
Tensor2 outer(const LieVector& a, const LieVector& b);

/// Omega = sum of dual-basis pairs of the invariant form; throws InvalidInput if degenerate.
Tensor2 build_casimir_tensor(const LieAlgebra& g);

/// [r12,r13] + [r12,r23] + [r13,r23]
Tensor3 cyb(const LieAlgebra& g, const Tensor2& r);

/// x^123 + x^231 + x^312
Tensor3 alt(const Tensor3& t);

/// sum_i e_i ⊗ dr/d(var_i) for a dynamical variable var_i dual to basis element e_i.
Tensor3 dynamical_differential(const Tensor2& r,
                               const std::vector<std::pair<std::size_t, std::string>>& coords);

/// Project every slot onto m along u; requires a marked algebra.
template <std::size_t K>
Tensor<K> reduce_mod_u(const LieAlgebra& g, const Tensor<K>& t) {
  if (!g.marked()) throw InvalidInput("reduce_mod_u needs a u/m marking");
  Tensor<K> r;
  for (const auto& [k, c] : t.terms()) {
    bool keep = true;
    for (auto i : k) keep = keep && !g.in_u(i);
    if (keep) r.add_term(k, c);
  }
  return r;
}

/// sum over slots of ad_z acting in that slot.
template <std::size_t K>
Tensor<K> ad_action(const LieAlgebra& g, std::size_t z, const Tensor<K>& t) {
  Tensor<K> r;
  for (const auto& [k, c] : t.terms())
    for (std::size_t s = 0; s < K; ++s)
      for (const auto& [j, d] : g.bracket(z, k[s])) {
        auto nk = k;
        nk[s] = j;
        r.add_term(nk, c * d);
      }
  return r;
}

/// True iff ad_z(t) = 0 for every listed generator z.
template <std::size_t K>
bool check_invariance(const LieAlgebra& g, const Tensor<K>& t, const std::vector<std::size_t>& gens) {
  for (auto z : gens)
    if (!ad_action(g, z, t).is_zero()) return false;
  return true;
}

/// Every slot index lies in `allowed`.
template <std::size_t K>
bool supported_on(const Tensor<K>& t, const std::vector<bool>& allowed) {
  for (const auto& [k, c] : t.terms())
    for (auto i : k)
      if (!allowed.at(i)) return false;
  return true;
}

std::string to_string(const LieAlgebra& g, const Tensor2& t);
std::string to_string(const LieAlgebra& g, const Tensor3& t);

}  // namespace dynr

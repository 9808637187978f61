// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynr/linalg.hpp"
#include "dynr/polynomial.hpp"

namespace dynr {

/// A root written in coordinates of the Bourbaki simple roots.
using Root = std::vector<int>;

Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a);
bool is_zero_root(const Root& a);
std::string root_to_string(const Root& a);

/// Reduced root system of classical type, realized by its Bourbaki simple system.
///
/// Roots are stored positive-first (by height, then lexicographically
/// descending), followed by their negatives in the same order. The inner
/// product is normalized so that long roots have squared length 2.
class RootSystem {
 public:
  RootSystem(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  const Root& root(std::size_t i) const { return roots_.at(i); }
  std::vector<Root> simple_roots() const;
  std::vector<Root> positive_roots() const;

  std::optional<std::size_t> index_of(const Root& r) const;
  /// Index of a root; throws InvalidInput for non-roots.
  std::size_t require(const Root& r) const;
  bool contains(const Root& r) const { return index_of(r).has_value(); }
  bool is_positive(const Root& r) const;

  Rational inner(const Root& a, const Root& b) const;
  /// s_a(b) = b - 2<b,a>/<a,a> a
  Root reflect(const Root& a, const Root& b) const;

  /// Epsilon-basis coordinates of each root (used by the matrix model).
  const std::vector<std::vector<int>>& epsilon_coordinates() const { return eps_; }

 private:
  char type_;
  int rank_;
  std::vector<Root> roots_;
  std::vector<std::vector<int>> eps_;
  std::map<Root, std::size_t> index_;
  Matrix<Rational> gram_;
};

/// Build a classical root system; supported: A1..A8, B2..B6, C2..C6, D3..D6.
RootSystem build_root_system(char type, int rank);

/// Matrix realization of the Lie algebra of a root system.
///
/// Root vectors are normalized so that <E_a, E_-a> = 1 for the invariant form
/// <X, Y> = form_scale * Tr(XY): positive root vectors are elementary-matrix
/// combinations, negative ones are rescaled transposes.
struct MatrixModel {
  int matrix_size = 0;
  Rational form_scale;
  std::vector<Matrix<Rational>> root_vectors;  // aligned with RootSystem::roots()
  std::vector<Matrix<Rational>> cartan;        // h_i = [E_{a_i}, E_{-a_i}]

  Rational form(const Matrix<Rational>& x, const Matrix<Rational>& y) const;
};

MatrixModel build_matrix_model(const RootSystem& rs);

Matrix<Rational> commutator(const Matrix<Rational>& a, const Matrix<Rational>& b);

/// Structure constants c_ab with [E_a, E_b] = c_ab E_{a+b}, keyed by root indices.
struct StructureTable {
  std::map<std::pair<std::size_t, std::size_t>, Rational> constants;

  Rational at(std::size_t a, std::size_t b) const;
};

StructureTable chevalley_constants(const RootSystem& rs, const MatrixModel& model);

enum class SubsetTag { reductive, parabolic, levi, y_set, generic };

struct RootSubset {
  std::vector<Root> roots;
  SubsetTag tag = SubsetTag::generic;

  bool contains(const Root& r) const;
};

/// (U+U) ∩ R ⊆ U and -U = U.
bool check_reductive_subset(const RootSystem& rs, const std::vector<Root>& subset);

/// N = span(delta) ∩ R; delta must be a subset of the simple system `pi`.
RootSubset levi_subset(const RootSystem& rs, const std::vector<Root>& pi,
                       const std::vector<Root>& delta);

/// P ∪ (-P) = R and (P+P) ∩ R ⊆ P.
bool check_parabolic(const RootSystem& rs, const std::vector<Root>& subset);

struct YSetReport {
  std::vector<Root> y;
  bool no_opposite_pairs = false;  // (-Y) ∩ Y = ∅
  bool sum_closed = false;         // (Y+Y) ∩ R ⊆ Y
  bool difference_closed = false;  // a ∈ Y, b ∉ Y, a-b ∈ R => a-b ∈ Y

  bool all_hold() const { return no_opposite_pairs && sum_closed && difference_closed; }
};

/// Properties of Y = R \ P for a parabolic P; throws InvalidInput if P is not parabolic.
YSetReport y_set_properties(const RootSystem& rs, const std::vector<Root>& parabolic);

/// Positive roots with respect to an arbitrary simple system.
std::vector<Root> positive_roots_for(const RootSystem& rs, const std::vector<Root>& pi);

/// Coordinates of `r` in the basis `pi` (integers for roots and simple systems).
std::vector<Rational> coordinates_in(const std::vector<Root>& pi, const Root& r);

/// Every simple system of rs, one per Weyl chamber (orbit of the Bourbaki one).
std::vector<std::vector<Root>> all_simple_systems(const RootSystem& rs);

}  // namespace dynr

// SPDX-License-Identifier: Apache-2.0
#include "dynr/lie.hpp"

#include <algorithm>

#include "dynr/errors.hpp"

namespace dynr {

void axpy(LieVector& y, const FieldElement& a, const LieVector& x) {
  if (a.is_zero()) return;
  for (const auto& [k, c] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * c);
    } else {
      it->second += a * c;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

LieAlgebra::LieAlgebra(std::vector<std::string> names, const std::vector<Bracket>& brackets,
                       std::optional<Matrix<FieldElement>> form)
    : names_(std::move(names)), form_(std::move(form)) {
  const std::size_t n = names_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!index_.emplace(names_[i], i).second) throw InvalidInput("duplicate basis name " + names_[i]);
  table_.assign(n, std::vector<LieVector>(n));
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n || b.i == b.j) throw InvalidInput("bad bracket entry");
    LieVector v;
    axpy(v, 1, b.value);
    table_[b.i][b.j] = v;
    LieVector neg;
    axpy(neg, -1, b.value);
    table_[b.j][b.i] = neg;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        LieVector s = bracket(basis_vector(i), table_[j][k]);
        axpy(s, 1, bracket(basis_vector(j), table_[k][i]));
        axpy(s, 1, bracket(basis_vector(k), table_[i][j]));
        if (!s.empty())
          throw InvalidInput("Jacobi identity fails on (" + names_[i] + ", " + names_[j] + ", " +
                             names_[k] + ")");
      }
  if (form_) {
    if (form_->rows() != n || form_->cols() != n) throw InvalidInput("form has wrong size");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((*form_)(i, j) != (*form_)(j, i)) throw InvalidInput("form is not symmetric");
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const FieldElement s =
              pairing(table_[z][a], basis_vector(b)) + pairing(basis_vector(a), table_[z][b]);
          if (!s.is_zero())
            throw InvalidInput("form is not ad-invariant at (" + names_[z] + ", " + names_[a] + ", " +
                               names_[b] + ")");
        }
  }
}

std::size_t LieAlgebra::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InvalidInput("unknown basis element " + name);
  return it->second;
}

LieVector LieAlgebra::bracket(const LieVector& a, const LieVector& b) const {
  LieVector out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) axpy(out, ca * cb, table_[i][j]);
  return out;
}

const Matrix<FieldElement>& LieAlgebra::form() const {
  if (!form_) throw InvalidInput("algebra has no invariant form");
  return *form_;
}

FieldElement LieAlgebra::pairing(const LieVector& a, const LieVector& b) const {
  const auto& f = form();
  FieldElement s;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b)
      if (!f(i, j).is_zero()) s += ca * cb * f(i, j);
  return s;
}

void LieAlgebra::mark(const std::vector<std::size_t>& u) {
  std::vector<bool> flag(dim(), false);
  for (auto i : u) {
    if (i >= dim()) throw InvalidInput("marking index out of range");
    flag[i] = true;
  }
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!flag[i]) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : table_[i][j])
        if (flag[j] != flag[k])
          throw InvalidInput("marking violates [u,u] ⊆ u or [u,m] ⊆ m at (" + names_[i] + ", " +
                             names_[j] + ")");
  }
  in_u_ = flag;
}

bool LieAlgebra::in_u(std::size_t i) const {
  if (!marked()) throw InvalidInput("algebra has no u/m marking");
  return in_u_.at(i);
}

std::vector<std::size_t> LieAlgebra::u_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (in_u(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> LieAlgebra::m_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!in_u(i)) out.push_back(i);
  return out;
}

std::size_t LieAlgebra::root_vector(const Root& alpha) const {
  if (!rs_) throw InvalidInput("algebra carries no root data");
  return rs_->require(alpha);
}

std::string root_vector_name(const Root& alpha) { return "E" + root_to_string(alpha); }

LieAlgebra realize_lie_algebra(const RootSystem& rs, const std::optional<std::vector<Root>>& U) {
  const MatrixModel model = build_matrix_model(rs);
  std::vector<Matrix<Rational>> basis = model.root_vectors;
  std::vector<std::string> names;
  for (const Root& r : rs.roots()) names.push_back(root_vector_name(r));
  for (std::size_t i = 0; i < model.cartan.size(); ++i) {
    basis.push_back(model.cartan[i]);
    names.push_back("h" + std::to_string(i + 1));
  }
  const std::size_t n = basis.size();
  Matrix<Rational> gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = model.form(basis[i], basis[j]);
  const Matrix<Rational> ginv = inverse(gram);
  auto decompose = [&](const Matrix<Rational>& m) {
    std::vector<Rational> pair(n);
    for (std::size_t l = 0; l < n; ++l) pair[l] = model.form(basis[l], m);
    LieVector v;
    for (std::size_t k = 0; k < n; ++k) {
      Rational c = 0;
      for (std::size_t l = 0; l < n; ++l)
        if (ginv(k, l) != 0 && pair[l] != 0) c += ginv(k, l) * pair[l];
      if (c != 0) v.emplace(k, FieldElement(c));
    }
    return v;
  };
  std::vector<LieAlgebra::Bracket> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix<Rational> c = commutator(basis[i], basis[j]);
      if (c.is_zero_matrix()) continue;
      brackets.push_back({i, j, decompose(c)});
    }
  Matrix<FieldElement> form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form(i, j) = FieldElement(gram(i, j));
  LieAlgebra g(std::move(names), brackets, std::move(form));
  g.rs_ = rs;
  for (std::size_t i = 0; i < model.cartan.size(); ++i) g.cartan_.push_back(rs.size() + i);
  if (U) {
    if (!check_reductive_subset(rs, *U)) throw InvalidInput("U is not a reductive subset");
    std::vector<std::size_t> u = g.cartan_;
    for (const Root& r : *U) u.push_back(rs.require(r));
    g.mark(u);
  }
  return g;
}

LieAlgebra sl2() {
  // x, y, h with [h,x] = 2x, [h,y] = -2y, [x,y] = h
  Matrix<FieldElement> form(3, 3);
  form(0, 1) = form(1, 0) = 1;
  form(2, 2) = 2;
  return LieAlgebra({"x", "y", "h"},
                    {{0, 1, {{2, 1}}}, {2, 0, {{0, 2}}}, {2, 1, {{1, -2}}}}, std::move(form));
}

LieAlgebra nonabelian2() { return LieAlgebra({"b", "a"}, {{0, 1, {{1, 1}, {0, -1}}}}); }

}  // namespace dynr

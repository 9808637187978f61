// SPDX-License-Identifier: Apache-2.0
#include "dynr/verma.hpp"

#include "dynr/errors.hpp"
#include "dynr/twist.hpp"

namespace dynr {

namespace {

FieldElement lambda() { return FieldElement::variable(twist_context(), "lambda"); }

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool all_zero(const ModuleVector& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

FiniteModule::FiniteModule(int m) : m_(m) {
  if (m < 0) throw InvalidInput("highest weight must be non-negative");
  const std::size_t d = dim();
  x_ = Matrix<Rational>(d, d);
  y_ = Matrix<Rational>(d, d);
  h_ = Matrix<Rational>(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    h_(k, k) = weight(k);
    if (k + 1 < d) {
      y_(k + 1, k) = 1;
      x_(k, k + 1) = Rational(static_cast<long>((k + 1) * (m - static_cast<int>(k))));
    }
  }
}

std::vector<std::size_t> FiniteModule::weight_space(int mu) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < dim(); ++k)
    if (weight(k) == mu) out.push_back(k);
  return out;
}

const Matrix<Rational>& FiniteModule::action(const std::string& gen) const {
  if (gen == "x") return x_;
  if (gen == "y") return y_;
  if (gen == "h") return h_;
  throw InvalidInput("unknown sl(2) generator '" + gen + "'");
}

ModuleVector FiniteModule::apply(const std::string& gen, const ModuleVector& v) const {
  const Matrix<Rational>& a = action(gen);
  ModuleVector out(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c)
      if (a(r, c) != 0 && !v[c].is_zero()) out[r] += FieldElement(a(r, c)) * v[c];
  return out;
}

ModuleVector zero_weight_vector(const FiniteModule& V) {
  const auto zero = V.weight_space(0);
  if (zero.empty()) throw InvalidInput("module has no zero weight space");
  ModuleVector v(V.dim());
  v[zero[0]] = FieldElement(1);
  return v;
}

FieldElement VermaData::h_eigenvalue(std::size_t k) const {
  return lambda() - FieldElement(static_cast<long>(2 * k));
}

FieldElement VermaData::x_coefficient(std::size_t k) const {
  const FieldElement kk(static_cast<long>(k));
  return kk * (lambda() - kk + FieldElement(1));
}

bool VermaData::relations_hold() const {
  for (std::size_t k = 0; k + 1 <= depth; ++k) {
    // [h,x] m_k = 2x m_k, [h,y] m_k = -2y m_k, [x,y] m_k = h m_k
    if (k > 0 && (h_eigenvalue(k - 1) - h_eigenvalue(k)) * x_coefficient(k) != 2 * x_coefficient(k)) return false;
    if (h_eigenvalue(k + 1) - h_eigenvalue(k) != FieldElement(-2)) return false;
    if (x_coefficient(k + 1) - x_coefficient(k) != h_eigenvalue(k)) return false;
  }
  return true;
}

bool VermaData::casimir_scalar() const {
  const FieldElement lam = lambda();
  const FieldElement target = lam * (lam + FieldElement(2)) / FieldElement(2);
  for (std::size_t k = 0; k <= depth; ++k) {
    // xy m_k + yx m_k + h^2/2 m_k
    const FieldElement hk = h_eigenvalue(k);
    const FieldElement c = x_coefficient(k + 1) + x_coefficient(k) + hk * hk / FieldElement(2);
    if (c != target) return false;
  }
  return true;
}

VermaData build_verma(std::size_t depth) { return VermaData{depth}; }

Intertwiner solve_intertwiner(const VermaData& verma, const FiniteModule& V, const ModuleVector& v0) {
  const std::size_t d = V.dim(), K = verma.depth;
  if (v0.size() != d) throw InvalidInput("expectation vector has the wrong dimension");
  if (K < d) throw InvalidInput("Verma depth is below the module dimension");
  const ModuleVector hv0 = V.apply("h", v0);
  if (!all_zero(hv0)) throw InvalidInput("expectation vector is not of weight zero");

  const std::size_t n = (K + 1) * d;
  auto var = [d](std::size_t k, std::size_t i) { return k * d + i; };
  std::vector<std::vector<FieldElement>> rows;
  std::vector<FieldElement> rhs;
  auto new_row = [&]() -> std::vector<FieldElement>& {
    rows.emplace_back(n);
    rhs.emplace_back();
    return rows.back();
  };
  for (std::size_t i = 0; i < d; ++i) {
    new_row()[var(0, i)] = FieldElement(1);
    rhs.back() = v0[i];
  }
  // h Phi = lambda Phi
  for (std::size_t k = 0; k <= K; ++k)
    for (std::size_t i = 0; i < d; ++i) {
      const long c = V.weight(i) - static_cast<long>(2 * k);
      if (c != 0) new_row()[var(k, i)] = FieldElement(c);
    }
  // x Phi = 0, component at m_k
  const Matrix<Rational>& X = V.action("x");
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t i = 0; i < d; ++i) {
      auto& row = new_row();
      row[var(k + 1, i)] = verma.x_coefficient(k + 1);
      for (std::size_t j = 0; j < d; ++j)
        if (X(i, j) != 0) row[var(k, j)] += FieldElement(X(i, j));
    }
  Matrix<FieldElement> a(rows.size(), n, FieldElement());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = rows[r][c];
  const std::vector<FieldElement> z = solve(a, rhs);

  Intertwiner phi;
  phi.module_weight = V.highest_weight();
  phi.image.assign(K + 1, ModuleVector(d));
  for (std::size_t k = 0; k <= K; ++k)
    for (std::size_t i = 0; i < d; ++i) phi.image[k][i] = z[var(k, i)];
  if (!all_zero(phi.image[K])) throw InvalidInput("Verma depth insufficient for the intertwiner");
  phi.expectation = phi.image[0];
  return phi;
}

ModuleVector abrr_action(const FiniteModule& V, const FiniteModule& W, const ModuleVector& u,
                         const std::map<int, FieldElement>& scale) {
  const std::size_t dv = V.dim(), dw = W.dim();
  if (u.size() != dv * dw) throw InvalidInput("vector does not lie in V ⊗ W");
  const FieldElement lam = lambda();
  ModuleVector out(dv * dw);
  const std::size_t top = std::min(dv, dw);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j) {
      if (u[i * dw + j].is_zero()) continue;
      const FieldElement mu(static_cast<long>(W.weight(j)));
      ModuleVector a(dv), b(dw);
      a[i] = FieldElement(1);
      b[j] = FieldElement(1);
      FieldElement denom(1);  // prod_{k<n} (lambda - mu - k)
      for (std::size_t n = 0; n < top; ++n) {
        if (n > 0) {
          denom *= lam - mu - FieldElement(static_cast<long>(n - 1));
          a = V.apply("y", a);
          b = W.apply("x", b);
        }
        if (all_zero(a) || all_zero(b)) break;
        FieldElement c = FieldElement(Rational(n % 2 ? -1 : 1) / factorial(static_cast<int>(n))) / denom;
        if (auto it = scale.find(static_cast<int>(n)); it != scale.end()) c *= it->second;
        c *= u[i * dw + j];
        for (std::size_t p = 0; p < dv; ++p)
          for (std::size_t q = 0; q < dw; ++q)
            if (!a[p].is_zero() && !b[q].is_zero()) out[p * dw + q] += c * a[p] * b[q];
      }
    }
  return out;
}

bool OracleReport::passed() const { return all_zero(difference); }

OracleReport compose_and_extract(const FiniteModule& V, const FiniteModule& W, const ModuleVector& v0,
                                 const ModuleVector& w0, std::size_t depth,
                                 const std::map<int, FieldElement>& scale) {
  if (depth == 0) depth = V.dim() + W.dim();
  const VermaData verma = build_verma(depth);
  const Intertwiner phi = solve_intertwiner(verma, V, v0);
  const Intertwiner psi = solve_intertwiner(verma, W, w0);
  const std::size_t dv = V.dim(), dw = W.dim();

  OracleReport rep;
  rep.V = V.highest_weight();
  rep.W = W.highest_weight();
  rep.depth = depth;
  rep.composed.assign(dv * dw, FieldElement());
  // phi(m_k) = Delta(y)^k phi(1_lambda); keep the truncated M ⊗ V element
  VermaTensor cur = phi.image;
  for (std::size_t k = 0; k <= depth; ++k) {
    const ModuleVector& wk = psi.image[k];
    if (!all_zero(wk))
      for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dw; ++j)
          if (!cur[0][i].is_zero() && !wk[j].is_zero()) rep.composed[i * dw + j] += cur[0][i] * wk[j];
    VermaTensor next(depth + 1, ModuleVector(dv));
    for (std::size_t r = 0; r <= depth; ++r) {
      const ModuleVector yv = V.apply("y", cur[r]);
      for (std::size_t i = 0; i < dv; ++i) {
        next[r][i] += yv[i];
        if (r + 1 <= depth) next[r + 1][i] += cur[r][i];
      }
    }
    cur = std::move(next);
  }
  ModuleVector u(dv * dw);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j) u[i * dw + j] = phi.expectation[i] * psi.expectation[j];
  rep.predicted = abrr_action(V, W, u, scale);
  rep.difference.resize(dv * dw);
  for (std::size_t i = 0; i < dv * dw; ++i) rep.difference[i] = rep.composed[i] - rep.predicted[i];
  return rep;
}

}  // namespace dynr

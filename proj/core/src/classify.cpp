// SPDX-License-Identifier: Apache-2.0
#include "dynr/classify.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "dynr/errors.hpp"
#include "dynr/linalg.hpp"

namespace dynr {

namespace {

const FieldElement kHalf{Rational(1, 2)};

bool is_positive_for(const std::vector<Root>& pi, const Root& r) {
  const auto k = coordinates_in(pi, r);
  return std::all_of(k.begin(), k.end(), [](const Rational& x) { return x >= 0; });
}

bool is_simple_system(const RootSystem& rs, const std::vector<Root>& pi) {
  if (pi.size() != static_cast<std::size_t>(rs.rank())) return false;
  for (const Root& s : pi)
    if (!rs.contains(s)) return false;
  try {
    for (const Root& r : rs.roots()) {
      const auto k = coordinates_in(pi, r);
      bool pos = true, neg = true;
      for (const Rational& c : k) {
        if (c.get_den() != 1) return false;
        pos = pos && c >= 0;
        neg = neg && c <= 0;
      }
      if (!pos && !neg) return false;
    }
  } catch (const SingularSystem&) {
    return false;
  }
  return true;
}

bool contains(const std::vector<Root>& v, const Root& r) { return std::find(v.begin(), v.end(), r) != v.end(); }

std::size_t rank_of(const std::vector<std::vector<FieldElement>>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  Matrix<FieldElement> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return rank(m);
}

}  // namespace

ContextPtr t_context(int rank) {
  static std::mutex mu;
  static std::map<int, ContextPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[rank];
  if (!slot) {
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) names.push_back("t" + std::to_string(i));
    slot = Context::make(names);
  }
  return slot;
}

DynrSpec make_spec(const RootSystem& rs, const std::vector<Root>& delta, const std::vector<Root>& U,
                   const std::map<Root, FieldElement>& bindings) {
  DynrSpec spec{rs, rs.simple_roots(), delta, U, {}};
  const ContextPtr ctx = t_context(rs.rank());
  for (const Root& d : delta) {
    if (auto it = bindings.find(d); it != bindings.end()) {
      spec.t[d] = it->second;
    } else if (contains(U, d)) {
      spec.t[d] = FieldElement::constant(ctx, 1);
    } else {
      const auto k = std::find(d.begin(), d.end(), 1) - d.begin();
      spec.t[d] = FieldElement::variable(ctx, "t" + std::to_string(k + 1));
    }
  }
  for (const auto& [r, v] : bindings)
    if (!contains(delta, r)) throw InvalidInput("t binding for " + root_to_string(r) + " outside Delta");
  return spec;
}

RootSubset levi_set(const DynrSpec& spec) { return levi_subset(spec.rs, spec.pi, spec.delta); }

FieldElement t_of(const DynrSpec& spec, const Root& alpha) {
  const auto k = coordinates_in(spec.pi, alpha);
  FieldElement t(1);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    auto it = spec.t.find(spec.pi[i]);
    if (it == spec.t.end()) throw InvalidInput(root_to_string(alpha) + " is not in the Levi set");
    t *= it->second.pow(static_cast<int>(k[i].get_num().get_si()));
  }
  return t;
}

void validate_spec(const DynrSpec& spec) {
  const RootSystem& rs = spec.rs;
  if (!is_simple_system(rs, spec.pi)) throw InvalidInput("Pi is not a simple system");
  for (const Root& d : spec.delta)
    if (!contains(spec.pi, d)) throw InvalidInput("Delta is not a subset of Pi");
  if (!check_reductive_subset(rs, spec.U)) throw InvalidInput("U is not reductive");
  const RootSubset n = levi_set(spec);
  for (const Root& u : spec.U)
    if (!n.contains(u)) throw InvalidInput("U is not contained in N: " + root_to_string(u));
  for (const Root& d : spec.delta)
    if (!spec.t.count(d)) throw InvalidInput("missing t parameter for " + root_to_string(d));
  for (const Root& a : n.roots) {
    const bool unit = (t_of(spec, a) - FieldElement(1)).is_zero();
    if (contains(spec.U, a) && !unit)
      throw InvalidInput("t must equal 1 on U, fails at " + root_to_string(a));
    if (!contains(spec.U, a) && unit)
      throw PoleError("t = 1 at " + root_to_string(a) + " in N \\ U (pole of coth)");
  }
}

CoefficientFamily build_coefficients(const DynrSpec& spec) {
  validate_spec(spec);
  const RootSubset n = levi_set(spec);
  CoefficientFamily fam;
  for (const Root& a : spec.rs.roots()) {
    if (contains(spec.U, a)) {
      fam.x.emplace_back(0);
    } else if (n.contains(a)) {
      const FieldElement t = t_of(spec, a);
      fam.x.push_back(kHalf * (t + 1) / (t - 1));
    } else {
      fam.x.push_back(is_positive_for(spec.pi, a) ? kHalf : -kHalf);
    }
  }
  return fam;
}

ConditionReport check_coefficient_conditions(const RootSystem& rs, const CoefficientFamily& fam,
                                             const std::vector<Root>& U) {
  if (fam.x.size() != rs.size()) throw InvalidInput("coefficient family has wrong length");
  ConditionReport rep;
  auto fail = [](ConditionResult& c, std::vector<Root> w, FieldElement res) {
    if (!c.passed) return;
    c.passed = false;
    c.witness = std::move(w);
    c.residual = std::move(res);
  };
  const auto& R = rs.roots();
  for (std::size_t i = 0; i < R.size(); ++i) {
    const FieldElement& xa = fam.x[i];
    if (contains(U, R[i]) && !xa.is_zero()) fail(rep.a, {R[i]}, xa);
    const FieldElement sum = xa + fam.at(rs, -R[i]);
    if (!sum.is_zero()) fail(rep.b, {R[i], -R[i]}, sum);
  }
  const FieldElement quarter(Rational(1, 4));
  for (std::size_t i = 0; i < R.size(); ++i) {
    if (contains(U, R[i])) continue;
    for (std::size_t j = 0; j < R.size(); ++j) {
      if (contains(U, R[j])) continue;
      const Root g = -(R[i] + R[j]);
      if (!rs.contains(g)) continue;
      const FieldElement &xa = fam.x[i], &xb = fam.x[j];
      if (contains(U, g)) {
        const FieldElement s = xa + xb;
        if (!s.is_zero()) fail(rep.c, {R[i], R[j], g}, s);
      } else {
        const FieldElement& xg = fam.at(rs, g);
        const FieldElement s = xa * xb + xb * xg + xg * xa + quarter;
        if (!s.is_zero()) fail(rep.d, {R[i], R[j], g}, s);
      }
    }
  }
  return rep;
}

bool check_shift_form(const RootSystem& rs, const CoefficientFamily& fam, const std::vector<Root>& U) {
  for (const Root& a : rs.roots()) {
    if (contains(U, a)) continue;
    for (const Root& b : U)
      if (rs.contains(a + b) && fam.at(rs, a + b) != fam.at(rs, a)) return false;
  }
  return true;
}

Tensor2 coefficients_to_tensor(const LieAlgebra& g, const CoefficientFamily& fam) {
  const RootSystem& rs = *g.root_system();
  Tensor2 r = kHalf * build_casimir_tensor(g);
  for (std::size_t i = 0; i < rs.size(); ++i)
    r.add_term({g.root_vector(rs.root(i)), g.root_vector(-rs.root(i))}, fam.x[i]);
  return r;
}

MembershipReport check_in_M_Omega(const LieAlgebra& g, const Tensor2& b) {
  const Tensor2 omega = build_casimir_tensor(g);
  if (!(b + flip(b) == omega)) throw QuasiUnitarityError("b + b^21 differs from Omega");
  const Tensor2 x = b - kHalf * omega;
  MembershipReport rep;
  rep.antisymmetric = flip(x) == -x;
  std::vector<bool> m(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) m[i] = !g.in_u(i);
  rep.m_supported = supported_on(x, m);
  rep.u_invariant = check_invariance(g, x, g.u_basis());
  rep.reduced_cyb = reduce_mod_u(g, cyb(g, b));
  rep.cyb_vanishes = rep.reduced_cyb.is_zero();
  return rep;
}

std::vector<ClassificationWitness> recover_classification(const RootSystem& rs, const CoefficientFamily& fam,
                                                          const std::vector<Root>& U,
                                                          const ContextPtr& ctx) {
  if (fam.x.size() != rs.size()) throw InvalidInput("coefficient family has wrong length");
  std::vector<Root> p;
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (fam.x[i] != -kHalf) p.push_back(rs.root(i));
  if (!check_parabolic(rs, p)) throw InvalidInput("P = {x != -1/2} is not parabolic");
  std::set<Root> pset(p.begin(), p.end());
  std::set<Root> nset;
  for (const Root& r : p)
    if (pset.count(-r)) nset.insert(r);
  std::vector<ClassificationWitness> out;
  for (const auto& pi : all_simple_systems(rs)) {
    std::vector<Root> delta;
    for (const Root& s : pi)
      if (nset.count(s)) delta.push_back(s);
    const RootSubset levi = levi_subset(rs, pi, delta);
    if (std::set<Root>(levi.roots.begin(), levi.roots.end()) != nset) continue;
    std::set<Root> expected = nset;
    for (const Root& r : positive_roots_for(rs, pi)) expected.insert(r);
    if (expected != pset) continue;
    ClassificationWitness w{pi, delta, {}, false};
    for (const Root& d : delta) {
      if (contains(U, d)) {
        w.t[d] = FieldElement::constant(ctx, 1);
      } else {
        const FieldElement& x = fam.at(rs, d);
        w.t[d] = (2 * x + 1) / (2 * x - 1);
      }
    }
    try {
      w.round_trip = build_coefficients(DynrSpec{rs, pi, delta, U, w.t}) == fam;
    } catch (const std::exception&) {
      w.round_trip = false;
    }
    out.push_back(std::move(w));
  }
  return out;
}

Tensor2 recover_b_from_initial(const LieAlgebra& g, const Tensor2& pi_e, const Tensor2& rho) {
  const Tensor2 omega = build_casimir_tensor(g);
  if (!(rho + flip(rho) == omega)) throw QuasiUnitarityError("rho + rho^21 differs from Omega");
  if (!(flip(pi_e) == -pi_e)) throw InvalidInput("pi_e is not antisymmetric");
  std::vector<bool> m(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) m[i] = !g.in_u(i);
  if (!supported_on(pi_e, m)) throw InvalidInput("pi_e is not supported on m ⊗ m");
  const Tensor2 half = kHalf * omega;
  return half + pi_e + reduce_mod_u(g, rho - half);
}

LagrangianData build_lagrangian(const DynrSpec& spec, const LieAlgebra& g) {
  validate_spec(spec);
  const RootSystem& rs = spec.rs;
  const std::size_t n = g.dim();
  const RootSubset levi = levi_set(spec);
  LagrangianData l;
  auto vec = [&](std::optional<std::size_t> left, std::optional<std::size_t> right, const FieldElement& s) {
    std::vector<FieldElement> v(2 * n);
    if (left) v[*left] = 1;
    if (right) v[n + *right] = s;
    return v;
  };
  for (const Root& a : rs.roots()) {
    const std::size_t i = g.root_vector(a);
    if (levi.contains(a))
      l.basis.push_back(vec(i, i, t_of(spec, a)));
    else if (is_positive_for(spec.pi, a))
      l.basis.push_back(vec(std::nullopt, i, 1));
    else
      l.basis.push_back(vec(i, std::nullopt, 1));
  }
  for (std::size_t h : g.cartan()) l.basis.push_back(vec(h, h, 1));
  return l;
}

LagrangianReport check_lagrangian(const LieAlgebra& g, const LagrangianData& l) {
  const std::size_t n = g.dim();
  LagrangianReport rep;
  rep.dim_g = n;
  rep.dim = rank_of(l.basis, 2 * n);
  auto split = [&](const std::vector<FieldElement>& v) {
    LieVector a, b;
    for (std::size_t i = 0; i < n; ++i) {
      if (!v[i].is_zero()) a[i] = v[i];
      if (!v[n + i].is_zero()) b[i] = v[n + i];
    }
    return std::make_pair(a, b);
  };
  rep.isotropic = true;
  std::vector<std::vector<FieldElement>> with_brackets = l.basis;
  for (const auto& v : l.basis)
    for (const auto& w : l.basis) {
      const auto [v1, v2] = split(v);
      const auto [w1, w2] = split(w);
      if (!(g.pairing(v1, w1) - g.pairing(v2, w2)).is_zero()) rep.isotropic = false;
      std::vector<FieldElement> br(2 * n);
      for (const auto& [k, c] : g.bracket(v1, w1)) br[k] = c;
      for (const auto& [k, c] : g.bracket(v2, w2)) br[n + k] = c;
      with_brackets.push_back(std::move(br));
    }
  rep.bracket_closed = rank_of(with_brackets, 2 * n) == rep.dim;
  std::vector<std::vector<FieldElement>> with_diag = l.basis;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElement> d(2 * n);
    d[i] = d[n + i] = 1;
    with_diag.push_back(std::move(d));
  }
  rep.intersection_dim = rep.dim + n - rank_of(with_diag, 2 * n);
  const auto u = g.u_basis();
  rep.u_dim = u.size();
  std::vector<std::vector<FieldElement>> with_u = l.basis;
  for (auto i : u) {
    std::vector<FieldElement> d(2 * n);
    d[i] = d[n + i] = 1;
    with_u.push_back(std::move(d));
  }
  rep.contains_u_diag = rank_of(with_u, 2 * n) == rep.dim;
  return rep;
}

}  // namespace dynr

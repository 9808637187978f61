// SPDX-License-Identifier: Apache-2.0
#include "dynr/orbit.hpp"

#include <sstream>

#include "dynr/errors.hpp"
#include "dynr/linalg.hpp"

namespace dynr {

namespace {

using Mat2 = std::array<std::array<Rational, 2>, 2>;

FieldElement lambda() { return FieldElement::variable(twist_context(), "lambda"); }

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

Mat2 generator_matrix(const std::string& name) {
  if (name == "x") return {{{0, 1}, {0, 0}}};
  if (name == "y") return {{{0, 0}, {1, 0}}};
  if (name == "h") return {{{1, 0}, {0, -1}}};
  throw InvalidInput("no 2x2 realization for generator '" + name + "'");
}

Mat2 lie_matrix(const LieVector& a) {
  static const LieAlgebra g = sl2();
  Mat2 m{{{0, 0}, {0, 0}}};
  for (const auto& [i, c] : a) {
    const Rational v = c.constant_value();
    const Mat2 b = generator_matrix(g.name(i));
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) m[r][s] += v * b[r][s];
  }
  return m;
}

using FMat = std::array<std::array<OrbitFunction, 2>, 2>;

FMat coordinates() {
  FMat g;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) g[k][l] = OrbitFunction::coordinate(k + 1, l + 1);
  return g;
}

OrbitFunction times(const Rational& c, const OrbitFunction& f) { return FieldElement(c) * f; }

// Vector field sum_{kl} coef_kl d/dg_kl with coef = g v (left) or v g (right).
OrbitFunction apply_field(const Mat2& v, const OrbitFunction& f, bool left) {
  const FMat g = coordinates();
  OrbitFunction out;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) {
      OrbitFunction coef;
      for (int m = 0; m < 2; ++m) {
        if (left && v[m][l] != 0) coef += times(v[m][l], g[k][m]);
        if (!left && v[k][m] != 0) coef += times(v[k][m], g[m][l]);
      }
      if (coef.is_zero()) continue;
      const OrbitFunction d = f.derivative(k + 1, l + 1);
      if (!d.is_zero()) out += coef * d;
    }
  return out;
}

OrbitFunction apply_generator(const std::string& name, const OrbitFunction& f, int times_applied) {
  const Mat2 v = generator_matrix(name);
  OrbitFunction r = f;
  for (int i = 0; i < times_applied && !r.is_zero(); ++i) r = apply_field(v, r, true);
  return r;
}

// ->u for a PBW monomial: rightmost generator acts first.
OrbitFunction apply_monomial(const UEAPtr& alg, const Exponent& e, const OrbitFunction& f) {
  OrbitFunction r = f;
  for (std::size_t p = e.size(); p-- > 0;)
    if (e[p] > 0) r = apply_generator(alg->gen_name(p), r, e[p]);
  return r;
}

void require_h_invariant(const OrbitFunction& f) {
  if (!apply_generator("h", f, 1).is_zero())
    throw InvalidInput("star product input is not annihilated by ->h");
}

// (->y^n f1, ->x^n f2) pairs until one side vanishes.
std::vector<OrbitFunction> star_terms(const OrbitFunction& f1, const OrbitFunction& f2) {
  require_h_invariant(f1);
  require_h_invariant(f2);
  std::vector<OrbitFunction> terms;
  OrbitFunction a = f1, b = f2;
  while (!a.is_zero() && !b.is_zero()) {
    terms.push_back(a * b);
    a = apply_generator("y", a, 1);
    b = apply_generator("x", b, 1);
  }
  return terms;
}

LieVector basis(const std::string& n) { return LieAlgebra::basis_vector(sl2().index(n)); }

}  // namespace

OrbitFunction::OrbitFunction(const FieldElement& c) {
  if (!c.is_zero()) terms_[{0, 0, 0, 0}] = c;
}

OrbitFunction OrbitFunction::coordinate(int k, int l) {
  if (k < 1 || k > 2 || l < 1 || l > 2) throw InvalidInput("matrix coordinate out of range");
  OrbitFunction f;
  Exps e{0, 0, 0, 0};
  e[(k - 1) * 2 + (l - 1)] = 1;
  f.terms_[e] = FieldElement(1);
  return f;
}

int OrbitFunction::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

void OrbitFunction::add_reduced(Exps e, const FieldElement& c) {
  if (c.is_zero()) return;
  const int a = std::min(e[0], e[3]);
  for (int k = 0; k <= a; ++k) {
    const Exps r{e[0] - a, e[1] + k, e[2] + k, e[3] - a};
    FieldElement& slot = terms_[r];
    slot += FieldElement(binomial(a, k)) * c;
    if (slot.is_zero()) terms_.erase(r);
  }
}

OrbitFunction& OrbitFunction::operator+=(const OrbitFunction& o) {
  for (const auto& [e, c] : o.terms_) add_reduced(e, c);
  return *this;
}

OrbitFunction& OrbitFunction::operator-=(const OrbitFunction& o) {
  for (const auto& [e, c] : o.terms_) add_reduced(e, -c);
  return *this;
}

OrbitFunction operator*(const OrbitFunction& a, const OrbitFunction& b) {
  OrbitFunction out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      OrbitFunction::Exps e;
      for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      out.add_reduced(e, ca * cb);
    }
  return out;
}

OrbitFunction operator*(const FieldElement& s, const OrbitFunction& f) {
  OrbitFunction out;
  if (s.is_zero()) return out;
  for (const auto& [e, c] : f.terms_) out.terms_[e] = s * c;
  return out;
}

OrbitFunction OrbitFunction::derivative(int k, int l) const {
  const int i = (k - 1) * 2 + (l - 1);
  OrbitFunction out;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exps d = e;
    d[i] -= 1;
    out.add_reduced(d, FieldElement(e[i]) * c);
  }
  return out;
}

FieldElement OrbitFunction::at(const std::array<Rational, 4>& g) const {
  if (g[0] * g[3] - g[1] * g[2] != 1) throw InvalidInput("matrix does not have determinant 1");
  FieldElement out;
  for (const auto& [e, c] : terms_) {
    Rational m = 1;
    for (int i = 0; i < 4; ++i)
      for (int p = 0; p < e[i]; ++p) m *= g[i];
    out += FieldElement(m) * c;
  }
  return out;
}

OrbitFunction OrbitFunction::evaluate(const std::map<std::string, FieldElement>& bindings) const {
  OrbitFunction out;
  for (const auto& [e, c] : terms_) out.add_reduced(e, c.evaluate(bindings));
  return out;
}

std::string OrbitFunction::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[4] = {"g11", "g12", "g21", "g22"};
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    for (int i = 0; i < 4; ++i)
      if (it->first[i] > 0) os << "*" << names[i] << (it->first[i] > 1 ? "^" + std::to_string(it->first[i]) : "");
  }
  return os.str();
}

OrbitFunction orbit_function(const LieVector& a) {
  const Mat2 am = lie_matrix(a);
  const FMat g = coordinates();
  // g h adj(g), adj(g) = [[g22, -g12], [-g21, g11]]
  FMat adj{{{g[1][1], -g[0][1]}, {-g[1][0], g[0][0]}}};
  FMat gh{{{g[0][0], -g[0][1]}, {g[1][0], -g[1][1]}}};
  OrbitFunction tr;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      OrbitFunction m = gh[i][0] * adj[0][j] + gh[i][1] * adj[1][j];
      if (am[j][i] != 0) tr += times(am[j][i], m);
    }
  return (lambda() / FieldElement(2)) * tr;
}

OrbitFunction orbit_function(const std::string& name) { return orbit_function(basis(name)); }

OrbitFunction invariant_derivative(const UEAElement& u, const OrbitFunction& f) {
  if (u.slots() != 1) throw InvalidInput("invariant_derivative expects a single-slot element");
  OrbitFunction out;
  for (const auto& [key, c] : u.terms()) out += c * apply_monomial(u.algebra(), key[0], f);
  return out;
}

OrbitFunction right_invariant_derivative(const LieVector& v, const OrbitFunction& f) {
  return apply_field(lie_matrix(v), f, false);
}

OrbitFunction star_product(const OrbitFunction& f1, const OrbitFunction& f2,
                           const std::map<int, FieldElement>& scale) {
  const auto terms = star_terms(f1, f2);
  const FieldElement lam = lambda();
  OrbitFunction out;
  FieldElement falling(1);  // lambda (lambda-1) ... (lambda-n+1)
  for (std::size_t n = 0; n < terms.size(); ++n) {
    if (n > 0) falling *= lam - FieldElement(static_cast<long>(n - 1));
    const FieldElement c =
        FieldElement(Rational(n % 2 ? -1 : 1) / factorial(static_cast<int>(n))) / falling;
    const auto it = scale.find(static_cast<int>(n));
    out += (it == scale.end() ? c : c * it->second) * terms[n];
  }
  return out;
}

std::vector<OrbitFunction> star_product_series(const OrbitFunction& f1, const OrbitFunction& f2,
                                               std::size_t N) {
  const auto terms = star_terms(f1, f2);
  const ContextPtr ctx = twist_context();
  const FieldElement lam = lambda();
  const FieldElement hbar = FieldElement::variable(ctx, "hbar");
  std::vector<OrbitFunction> out(N + 1);
  FieldElement falling(1);  // prod_{j<n} (lambda - j hbar)
  for (std::size_t n = 0; n < terms.size() && n <= N; ++n) {
    if (n > 0) falling *= lam - FieldElement(static_cast<long>(n - 1)) * hbar;
    const FieldElement sign(Rational(n % 2 ? -1 : 1) / factorial(static_cast<int>(n)));
    const auto s = series_expand(falling.inverse(), "hbar", N - n);
    for (std::size_t k = 0; k + n <= N; ++k)
      if (!s.coefficients[k].is_zero()) out[n + k] += (sign * s.coefficients[k]) * terms[n];
  }
  return out;
}

std::vector<OrbitFunction> apply_twist(const TwistSeries& J, const OrbitFunction& f1,
                                       const OrbitFunction& f2) {
  if (J.slots != 2) throw InvalidInput("apply_twist expects a two-slot series");
  std::vector<OrbitFunction> out(J.orders.size());
  for (std::size_t k = 0; k < J.orders.size(); ++k)
    for (const auto& [key, c] : J.orders[k].terms())
      out[k] += c * (apply_monomial(J.alg, key[0], f1) * apply_monomial(J.alg, key[1], f2));
  return out;
}

bool OrbitIdentityReport::passed() const {
  for (const auto* list : {&fafb_residuals, &commutator_residuals, &quasiclassical_residuals,
                           &equivariance_residuals, &twist_agreement_residuals})
    for (const auto& [name, r] : *list)
      if (!r.is_zero()) return false;
  return casimir_residual.is_zero() && associativity_failures.empty() &&
         graded_dims_orbit == graded_dims_quotient;
}

OrbitIdentityReport verify_orbit_identities() {
  OrbitIdentityReport rep;
  const LieAlgebra g = sl2();
  const FieldElement lam = lambda();
  const FieldElement half(Rational(1, 2));
  const std::vector<std::string> names{"x", "y", "h"};
  std::map<std::string, OrbitFunction> f;
  for (const auto& n : names) f[n] = orbit_function(n);

  for (const auto& a : names)
    for (const auto& b : names) {
      const LieVector br = g.bracket(basis(a), basis(b));
      const OrbitFunction fab = orbit_function(br);
      const OrbitFunction ab = star_product(f[a], f[b]);
      const OrbitFunction expect = (FieldElement(1) - lam.inverse()) * (f[a] * f[b]) + half * fab +
                                   OrbitFunction(half * lam * g.pairing(basis(a), basis(b)));
      rep.fafb_residuals.emplace_back(a + b, ab - expect);
      rep.commutator_residuals.emplace_back(a + b, ab - star_product(f[b], f[a]) - fab);

      const auto series_ab = star_product_series(f[a], f[b], 1);
      const auto series_ba = star_product_series(f[b], f[a], 1);
      const OrbitFunction anti = series_ab[1] - series_ba[1];
      // ->u_lambda with u_lambda = (1/lambda)(x⊗y - y⊗x)
      const OrbitFunction u = lam.inverse() * (apply_generator("x", f[a], 1) * apply_generator("y", f[b], 1) -
                                               apply_generator("y", f[a], 1) * apply_generator("x", f[b], 1));
      rep.quasiclassical_residuals.emplace_back(a + b + ":bracket", anti - fab);
      rep.quasiclassical_residuals.emplace_back(a + b + ":u_lambda", anti - u);
    }

  rep.casimir_value = star_product(f["x"], f["y"]) + star_product(f["y"], f["x"]) +
                      half * star_product(f["h"], f["h"]);
  rep.casimir_residual = rep.casimir_value - OrbitFunction(lam * (lam + FieldElement(2)) / FieldElement(2));

  const std::vector<std::pair<std::string, OrbitFunction>> set{
      {"fx", f["x"]}, {"fy", f["y"]}, {"fh", f["h"]}, {"fx*fy", f["x"] * f["y"]}, {"fh^2", f["h"] * f["h"]}};
  for (const auto& [n1, a] : set)
    for (const auto& [n2, b] : set) {
      const OrbitFunction ab = star_product(a, b);
      for (const auto& [n3, c] : set) {
        ++rep.associativity_triples;
        if (!(star_product(ab, c) - star_product(a, star_product(b, c))).is_zero())
          rep.associativity_failures.push_back(n1 + "," + n2 + "," + n3);
      }
    }

  // left translations act as derivations of the star product
  for (const auto& v : names)
    for (const auto& [n1, a] : set)
      for (const auto& [n2, b] : set) {
        if (n1 > n2) continue;
        const LieVector vv = basis(v);
        const OrbitFunction lhs = right_invariant_derivative(vv, star_product(a, b));
        const OrbitFunction rhs = star_product(right_invariant_derivative(vv, a), b) +
                                  star_product(a, right_invariant_derivative(vv, b));
        rep.equivariance_residuals.emplace_back(v + ":" + n1 + "," + n2, lhs - rhs);
      }

  const std::size_t N = 4;
  const TwistSeries J = abrr_twist(N);
  for (const auto& [n1, a] : set)
    for (const auto& [n2, b] : set) {
      const auto direct = apply_twist(J, a, b);
      const auto scalar = star_product_series(a, b, N);
      OrbitFunction diff;
      for (std::size_t k = 0; k <= N; ++k) diff += (direct[k] - scalar[k]);
      rep.twist_agreement_residuals.emplace_back(n1 + "," + n2, diff);
    }

  rep.graded_dims_orbit = orbit_filtered_dims(4);
  rep.graded_dims_quotient = quotient_filtered_dims(4);
  return rep;
}

std::vector<std::size_t> orbit_filtered_dims(int max_degree) {
  const std::vector<OrbitFunction> gens{orbit_function("x"), orbit_function("y"), orbit_function("h")};
  std::vector<std::size_t> dims;
  std::vector<OrbitFunction> layer{OrbitFunction(FieldElement(1))}, all = layer;
  for (int d = 0; d <= max_degree; ++d) {
    if (d > 0) {
      // monomials f_x^a f_y^b f_h^c of total degree d, built without repetition
      std::vector<OrbitFunction> next;
      for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) {
          OrbitFunction m(FieldElement(1));
          for (int i = 0; i < a; ++i) m = m * gens[0];
          for (int i = 0; i < b; ++i) m = m * gens[1];
          for (int i = 0; i < d - a - b; ++i) m = m * gens[2];
          next.push_back(m);
        }
      all.insert(all.end(), next.begin(), next.end());
    }
    std::map<OrbitFunction::Exps, std::size_t> col;
    for (const auto& fn : all)
      for (const auto& [e, c] : fn.terms()) col.emplace(e, col.size());
    Matrix<FieldElement> m(all.size(), col.size(), FieldElement());
    for (std::size_t r = 0; r < all.size(); ++r)
      for (const auto& [e, c] : all[r].terms()) m(r, col.at(e)) = c;
    dims.push_back(rank(m));
  }
  return dims;
}

std::vector<std::size_t> quotient_filtered_dims(int max_degree) {
  const UEAPtr U = sl2_uea();
  const FieldElement lam = lambda();
  const UEATensor x = UEATensor::generator(U, "x"), y = UEATensor::generator(U, "y"),
                  h = UEATensor::generator(U, "h");
  const UEATensor c = x * y + y * x + FieldElement(Rational(1, 2)) * (h * h) -
                      UEATensor::scalar(U, 1, lam * (lam + FieldElement(2)) / FieldElement(2));
  std::vector<std::size_t> dims;
  for (int d = 0; d <= max_degree; ++d) {
    std::size_t pbw = 0;
    std::vector<UEATensor> rel;
    for (int a = 0; a <= d; ++a)
      for (int b = 0; a + b <= d; ++b)
        for (int e = 0; a + b + e <= d; ++e) {
          ++pbw;
          if (a + b + e + 2 <= d) rel.push_back(c * UEATensor::monomial(U, UEATensor::Key{Exponent{a, b, e}}));
        }
    std::map<UEATensor::Key, std::size_t> col;
    for (const auto& t : rel)
      for (const auto& [k, v] : t.terms()) col.emplace(k, col.size());
    Matrix<FieldElement> m(rel.size(), col.size(), FieldElement());
    for (std::size_t r = 0; r < rel.size(); ++r)
      for (const auto& [k, v] : rel[r].terms()) m(r, col.at(k)) = v;
    dims.push_back(pbw - (rel.empty() ? 0 : rank(m)));
  }
  return dims;
}

}  // namespace dynr

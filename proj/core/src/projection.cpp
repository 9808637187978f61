// SPDX-License-Identifier: Apache-2.0
#include "dynr/projection.hpp"

#include <algorithm>
#include <mutex>

#include "dynr/errors.hpp"

namespace dynr {

namespace {

FieldElement lambda() { return FieldElement::variable(twist_context(), "lambda"); }

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

UEATensor project(const UEATensor& u, const SplittingData& sp) {
  return project_along_ideal(change_generators(u, sp.split), sp.h_gens);
}

// Factor (a)(a+1)...(a+n-1) in one slot.
UEATensor rising(const UEATensor& a, int n) {
  const UEATensor one = UEATensor::scalar(a.algebra(), 1, 1);
  UEATensor r = one;
  for (int j = 0; j < n; ++j) r = r * (a + FieldElement(j) * one);
  return r;
}

// d12 * L and d23 * j23 products, per order, without subtracting
std::pair<std::vector<UEATensor>, std::vector<UEATensor>> sides(const TwistSeries& J, const TwistSeries& second,
                                                                std::size_t N) {
  std::vector<UEATensor> left(N + 1, UEATensor(J.alg, 3)), right(N + 1, UEATensor(J.alg, 3));
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      const UEATensor d12 = coproduct(J.orders[i], 0), d23 = coproduct(J.orders[i], 1);
      left[k] += d12 * second.orders[k - i];
      right[k] += d23 * insert_unit(J.orders[k - i], 0);
    }
  return {left, right};
}

}  // namespace

SplittingData split_basis_sl2(const Rational& s) {
  if (s == 0) throw InvalidInput("splitting parameter must be nonzero");
  static std::mutex mu;
  static std::map<Rational, UEAPtr> cache;
  const LieAlgebra g = sl2();
  const std::size_t x = g.index("x"), y = g.index("y"), h = g.index("h");
  const FieldElement hb(1 / (2 * s)), ha(-s / 2);
  std::vector<LieVector> vectors{
      {{y, FieldElement(1)}, {h, hb}},
      {{x, FieldElement(1)}, {h, ha}},
      {{h, -hb}},
  };
  SplittingData sp;
  sp.ambient = sl2_uea();
  sp.v_gens = {"b", "a"};
  sp.h_gens = {"c"};
  sp.vectors = vectors;
  {
    std::lock_guard lock(mu);
    auto& slot = cache[s];
    if (!slot) slot = sp.ambient->change_basis({"b", "a", "c"}, vectors);
    sp.split = slot;
  }
  validate_splitting(sp);
  return sp;
}

void validate_splitting(const SplittingData& sp) {
  const LieAlgebra& g = sp.split->lie();
  std::vector<std::size_t> v, h;
  for (const auto& n : sp.v_gens) v.push_back(g.index(n));
  for (const auto& n : sp.h_gens) h.push_back(g.index(n));
  if (v.size() + h.size() != g.dim()) throw InvalidInput("v and h do not span g");
  auto in_span = [](const LieVector& w, const std::vector<std::size_t>& basis) {
    for (const auto& [i, c] : w)
      if (!c.is_zero() && std::find(basis.begin(), basis.end(), i) == basis.end()) return false;
    return true;
  };
  for (auto i : v)
    for (auto j : v)
      if (!in_span(g.bracket(i, j), v)) throw InvalidInput("v is not a subalgebra");
  for (auto i : h)
    for (auto j : h)
      if (!g.bracket(i, j).empty()) throw InvalidInput("h is not abelian");
  for (std::size_t p = 0; p < v.size(); ++p)
    if (sp.split->position(sp.v_gens[p]) != p) throw InvalidInput("v generators must come first in the PBW order");
}

TwistSeries project_twist(const TwistSeries& J, const SplittingData& sp) {
  if (J.alg != sp.ambient) throw InvalidInput("twist is not over the ambient algebra of the splitting");
  for (const auto& hname : sp.h_gens) {
    // h-generators of the splitting expressed back in the ambient basis
    const LieVector& hv = sp.vectors[sp.split->position(hname)];
    const UEATensor hu = UEATensor::from_lie(J.alg, hv);
    UEATensor dv = hu;
    for (std::size_t s = 1; s < J.slots; ++s) dv = coproduct(dv, s - 1);
    for (const auto& c : J.orders)
      if (!(dv * c - c * dv).is_zero()) throw InvalidInput("twist is not h-invariant; projection refused");
  }
  TwistSeries out{sp.split, J.slots, {}};
  for (const auto& c : J.orders) out.orders.push_back(project(c, sp));
  return out;
}

TwistSeries closed_form_jv(std::size_t N, const SplittingData& sp) {
  const UEAPtr U = sp.split;
  TwistSeries J = TwistSeries::trivial(U, N);
  const FieldElement lam = lambda();
  const FieldElement hbar = FieldElement::variable(twist_context(), "hbar");
  const UEATensor b = UEATensor::generator(U, sp.v_gens[0]), a = UEATensor::generator(U, sp.v_gens[1]);
  FieldElement falling(1);
  for (std::size_t n = 1; n <= N; ++n) {
    falling *= lam - FieldElement(static_cast<long>(n - 1)) * hbar;
    const UEATensor vn = tensor(rising(b, static_cast<int>(n)), rising(a, static_cast<int>(n)));
    const FieldElement sign(Rational(n % 2 ? -1 : 1) / factorial(static_cast<int>(n)));
    const auto s = series_expand(falling.inverse(), "hbar", N - n);
    for (std::size_t k = 0; k + n <= N; ++k)
      if (!s.coefficients[k].is_zero()) J.orders[n + k] += (sign * s.coefficients[k]) * vn;
  }
  return J;
}

TwistSeries closed_form_jv(std::size_t N) { return closed_form_jv(N, split_basis_sl2()); }

RisingFactorialResult rising_factorial_projection(int n, const SplittingData& sp) {
  if (n < 0 || n > sp.split->degree_cap()) throw InvalidInput("power outside the supported range");
  RisingFactorialResult r{UEATensor(sp.split, 1), UEATensor(sp.split, 1), false};
  const UEATensor y = UEATensor::generator(sp.ambient, "y");
  r.brute = project(y.pow(n), sp);
  r.closed = rising(UEATensor::generator(sp.split, sp.v_gens[0]), n);
  r.equal = r.brute == r.closed;
  return r;
}

RisingFactorialResult rising_factorial_projection(int n) { return rising_factorial_projection(n, split_basis_sl2()); }

UEAElement cb_identity_residual(int n, const SplittingData& sp) {
  const UEAPtr U = sp.split;
  const UEATensor b = UEATensor::generator(U, sp.v_gens[0]), c = UEATensor::generator(U, sp.h_gens[0]);
  const UEATensor one = UEATensor::scalar(U, 1, 1);
  const UEATensor b1n = (b + one).pow(n), bn = b.pow(n);
  return c * bn - b * (b1n - bn) - b1n * c;
}

TwistSeries complement_twist(const TwistSeries& J, const SplittingData& sp) {
  const TwistSeries Jv = project_twist(J, sp);
  TwistSeries out{sp.split, J.slots, {}};
  for (std::size_t k = 0; k < J.orders.size(); ++k)
    out.orders.push_back(change_generators(J.orders[k], sp.split) - Jv.orders[k]);
  return out;
}

std::vector<std::pair<UEATensor, UEATensor>> projection_residuals(const TwistSeries& J,
                                                                  const SplittingData& sp, std::size_t N) {
  const TwistSeries Jv = project_twist(J, sp);
  TwistSeries jv12 = TwistSeries::trivial(sp.split, N, 3);
  for (std::size_t k = 0; k <= N; ++k) jv12.orders[k] = insert_unit(Jv.orders[k], 2);
  const auto [dl, dr] = sides(J, shift_twist(J, N), N);
  const auto [vl, vr] = sides(Jv, jv12, N);
  std::vector<std::pair<UEATensor, UEATensor>> out;
  for (std::size_t k = 0; k <= N; ++k) out.emplace_back(project(dl[k], sp) - vl[k], project(dr[k], sp) - vr[k]);
  return out;
}

}  // namespace dynr

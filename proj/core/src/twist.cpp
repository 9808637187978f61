// SPDX-License-Identifier: Apache-2.0
#include "dynr/twist.hpp"

#include "dynr/errors.hpp"

namespace dynr {

namespace {

FieldElement lambda() { return FieldElement::variable(twist_context(), "lambda"); }

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

using Series = std::vector<UEATensor>;

Series series_multiply(const Series& a, const Series& b, std::size_t N) {
  Series out(N + 1, UEATensor(a[0].algebra(), a[0].slots()));
  for (std::size_t i = 0; i < a.size() && i <= N; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= N; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

ContextPtr twist_context() {
  static const ContextPtr ctx = Context::make({"lambda", "hbar"});
  return ctx;
}

TwistSeries TwistSeries::trivial(UEAPtr alg, std::size_t N, std::size_t slots) {
  TwistSeries t{alg, slots, std::vector<UEATensor>(N + 1, UEATensor(alg, slots))};
  t.orders[0] = UEATensor::scalar(alg, slots, 1);
  return t;
}

TwistSeries abrr_twist(std::size_t N, const std::map<int, FieldElement>& scale) {
  const UEAPtr U = sl2_uea();
  TwistSeries J = TwistSeries::trivial(U, N);
  const FieldElement lam = lambda();
  const UEATensor one = UEATensor::scalar(U, 1, 1);
  const UEATensor h = UEATensor::generator(U, "h");
  const UEATensor x = UEATensor::generator(U, "x");
  const UEATensor y = UEATensor::generator(U, "y");
  // running product prod_{j<n} (lambda - hbar(h+j))^{-1} as an hbar-series in U(sl2)
  Series prod(N + 1, UEATensor(U, 1));
  prod[0] = one;
  for (std::size_t n = 1; n <= N; ++n) {
    const FieldElement j(static_cast<long>(n - 1));
    // 1/(lambda - hbar(h+j)) = sum_m hbar^m (h+j)^m / lambda^{m+1}
    Series factor(N + 1, UEATensor(U, 1));
    UEATensor power = one;
    for (std::size_t m = 0; m + n <= N; ++m) {
      factor[m] = lam.pow(-static_cast<int>(m + 1)) * power;
      power = power * (h + j * one);
    }
    prod = series_multiply(prod, factor, N - n);
    FieldElement c = FieldElement(Rational(n % 2 ? -1 : 1) / factorial(static_cast<int>(n)));
    if (auto it = scale.find(static_cast<int>(n)); it != scale.end()) c *= it->second;
    const UEATensor left = y.pow(static_cast<int>(n));
    const UEATensor xn = x.pow(static_cast<int>(n));
    for (std::size_t m = 0; m + n <= N; ++m)
      if (!prod[m].is_zero()) J.orders[n + m] += c * tensor(left, xn * prod[m]);
  }
  return J;
}

TwistSeries shift_twist(const TwistSeries& J, std::size_t N) {
  if (J.order() < N) throw InvalidInput("twist is truncated below the requested order");
  if (J.slots != 2) throw InvalidInput("shift_twist expects a two-slot series");
  const UEAPtr& U = J.alg;
  const auto& g = U->lie();
  if (g.root_system() && g.root_system()->rank() != 1)
    throw InvalidInput("shift_twist supports a one-dimensional Cartan subalgebra only");
  TwistSeries S = TwistSeries::trivial(U, N, 3);
  S.orders[0] = UEATensor(U, 3);
  const UEATensor h = UEATensor::generator(U, "h");
  for (std::size_t m = 0; m <= N; ++m) {
    UEATensor d = J.orders[m];
    UEATensor hl = UEATensor::scalar(U, 1, 1);
    for (std::size_t l = 0; m + l <= N; ++l) {
      const FieldElement c(Rational(l % 2 ? -1 : 1) / factorial(static_cast<int>(l)));
      if (!d.is_zero()) S.orders[m + l] += c * tensor(d, hl);
      d = d.differentiate("lambda");
      hl = hl * h;
    }
  }
  return S;
}

bool TwistReport::passed() const {
  for (const auto& r : residuals)
    if (!r.is_zero()) return false;
  for (bool b : counit_left)
    if (!b) return false;
  for (bool b : counit_right)
    if (!b) return false;
  return true;
}

namespace {

void counit_checks(const TwistSeries& J, std::size_t N, TwistReport& rep) {
  for (std::size_t k = 0; k <= N; ++k) {
    const UEATensor expected = UEATensor::scalar(J.alg, 1, k == 0 ? 1 : 0);
    rep.counit_left.push_back(counit(J.orders[k], 0) == expected);
    rep.counit_right.push_back(counit(J.orders[k], 1) == expected);
  }
}

TwistReport cocycle_residual(const TwistSeries& J, const TwistSeries& second_left, std::size_t N) {
  TwistReport rep;
  std::vector<UEATensor> d12(N + 1, UEATensor(J.alg, 3)), d23(N + 1, UEATensor(J.alg, 3)),
      j23(N + 1, UEATensor(J.alg, 3));
  for (std::size_t k = 0; k <= N; ++k) {
    d12[k] = coproduct(J.orders[k], 0);
    d23[k] = coproduct(J.orders[k], 1);
    j23[k] = insert_unit(J.orders[k], 0);
  }
  for (std::size_t k = 0; k <= N; ++k) {
    UEATensor r(J.alg, 3);
    for (std::size_t i = 0; i <= k; ++i) {
      if (!d12[i].is_zero() && !second_left.orders[k - i].is_zero()) r += d12[i] * second_left.orders[k - i];
      if (!d23[i].is_zero() && !j23[k - i].is_zero()) r -= d23[i] * j23[k - i];
    }
    rep.residuals.push_back(std::move(r));
  }
  counit_checks(J, N, rep);
  return rep;
}

}  // namespace

TwistReport check_dynamical_twist(const TwistSeries& J, std::size_t N) {
  return cocycle_residual(J, shift_twist(J, N), N);
}

TwistReport check_nondynamical_twist(const TwistSeries& J, std::size_t N) {
  if (J.order() < N) throw InvalidInput("twist is truncated below the requested order");
  TwistSeries j12 = TwistSeries::trivial(J.alg, N, 3);
  for (std::size_t k = 0; k <= N; ++k) j12.orders[k] = insert_unit(J.orders[k], 2);
  return cocycle_residual(J, j12, N);
}

Tensor2 to_lie_tensor(const UEATensor& t) {
  if (t.slots() != 2) throw InvalidInput("expected a two-slot element");
  const UEA& U = *t.algebra();
  Tensor2 out;
  for (const auto& [k, c] : t.terms()) {
    std::array<std::size_t, 2> key{};
    for (std::size_t s = 0; s < 2; ++s) {
      int deg = 0;
      for (std::size_t p = 0; p < k[s].size(); ++p)
        if (k[s][p]) {
          deg += k[s][p];
          key[s] = U.lie().index(U.gen_name(p));
        }
      if (deg != 1) throw InvalidInput("element is not in g ⊗ g");
    }
    out.add_term(key, c);
  }
  return out;
}

Tensor2 classical_limit_r(const TwistSeries& J) {
  if (J.order() < 1) throw InvalidInput("classical limit needs the twist to order hbar^1");
  const ContextPtr ctx = twist_context();
  const FieldElement lam = lambda(), hb = FieldElement::variable(ctx, "hbar");
  UEATensor total(J.alg, 2);
  for (const auto& c : J.orders) total += c;
  UEATensor j(J.alg, 2);
  for (const auto& [k, c] : total.terms()) {
    const FieldElement rescaled = c.evaluate({{"lambda", lam / hb}});
    const auto s = series_expand(rescaled, "hbar", 1);
    j.add_term(k, s.coefficients[1]);
  }
  const Tensor2 jt = to_lie_tensor(j);
  return jt - flip(jt);
}

Tensor3 check_cdybe(const LieAlgebra& g, const Tensor2& r) {
  return alt(dynamical_differential(r, {{g.index("h"), "lambda"}})) + cyb(g, r);
}

bool check_weight_zero(const TwistSeries& J, const std::string& gen) {
  const UEATensor v = UEATensor::generator(J.alg, gen);
  UEATensor dv = v;
  for (std::size_t s = 1; s < J.slots; ++s) dv = coproduct(dv, s - 1);
  for (const auto& c : J.orders)
    if (!(dv * c - c * dv).is_zero()) return false;
  return true;
}

}  // namespace dynr

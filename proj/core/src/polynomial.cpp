// SPDX-License-Identifier: Apache-2.0
#include "dynr/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "dynr/errors.hpp"

namespace dynr {

namespace {

int degree_sum(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool divides(const Monomial& small, const Monomial& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

Monomial add_exponents(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw std::logic_error("polynomials from rings with different variable counts");
}

// Univariate polynomial over Q[other variables], keyed by degree in the main variable.
using UniPoly = std::map<int, Polynomial>;

int uni_degree(const UniPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }
const Polynomial& uni_lead(const UniPoly& p) { return p.rbegin()->second; }

void uni_prune(UniPoly& p) {
  for (auto it = p.begin(); it != p.end();) {
    if (it->second.is_zero())
      it = p.erase(it);
    else
      ++it;
  }
}

UniPoly uni_scale(const UniPoly& p, const Polynomial& c) {
  UniPoly r;
  for (const auto& [d, q] : p) r.emplace(d, q * c);
  uni_prune(r);
  return r;
}

UniPoly uni_divide(const UniPoly& p, const Polynomial& c) {
  UniPoly r;
  for (const auto& [d, q] : p) r.emplace(d, exact_divide(q, c));
  return r;
}

// lc(B)^(deg A - deg B + 1) * A mod B
UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  const int db = uni_degree(b);
  const Polynomial& lcb = uni_lead(b);
  int e = uni_degree(a) - db + 1;
  UniPoly r = a;
  while (!r.empty() && uni_degree(r) >= db) {
    const int dr = uni_degree(r);
    const Polynomial lcr = uni_lead(r);
    r = uni_scale(r, lcb);
    for (const auto& [d, q] : b) {
      auto& slot = r[d + dr - db];
      if (slot.nvars() != q.nvars()) slot = Polynomial(q.nvars());
      slot -= q * lcr;
    }
    uni_prune(r);
    --e;
  }
  if (e > 0 && !r.empty()) r = uni_scale(r, lcb.pow(static_cast<unsigned>(e)));
  return r;
}

std::vector<Rational> to_dense(const Polynomial& p, std::size_t var) {
  std::vector<Rational> d(static_cast<std::size_t>(std::max(p.degree(var), 0)) + 1);
  for (const auto& [m, c] : p.terms()) d[static_cast<std::size_t>(m[var])] = c;
  return d;
}

Polynomial from_dense(std::size_t nvars, std::size_t var, const std::vector<Rational>& d) {
  Polynomial p(nvars);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    Monomial m(nvars, 0);
    m[var] = static_cast<int>(i);
    p.add_term(m, d[i]);
  }
  return p;
}

void dense_trim(std::vector<Rational>& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

// Euclid over Q for polynomials in a single variable.
Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, std::size_t var) {
  std::vector<Rational> r0 = to_dense(a, var), r1 = to_dense(b, var);
  dense_trim(r0);
  dense_trim(r1);
  while (!r1.empty()) {
    const Rational lead = r1.back();
    const std::size_t d1 = r1.size() - 1;
    while (r0.size() > d1 && !r0.empty()) {
      const Rational q = r0.back() / lead;
      const std::size_t shift = r0.size() - 1 - d1;
      for (std::size_t i = 0; i <= d1; ++i) r0[i + shift] -= q * r1[i];
      dense_trim(r0);
    }
    std::swap(r0, r1);
  }
  return from_dense(a.nvars(), var, r0).monic();
}

Polynomial monomial_gcd(const Monomial& m, const Polynomial& p) {
  Monomial g = m;
  for (const auto& [t, c] : p.terms())
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], t[i]);
  return Polynomial::monomial(g, 1);
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (const auto& [d, c] : p.coefficients_in(var)) {
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial subresultant_gcd(const Polynomial& pa, const Polynomial& pb, std::size_t var) {
  UniPoly a = pa.coefficients_in(var), b = pb.coefficients_in(var);
  if (uni_degree(a) < uni_degree(b)) std::swap(a, b);
  const std::size_t n = pa.nvars();
  Polynomial g = Polynomial::constant(n, 1), h = Polynomial::constant(n, 1);
  for (;;) {
    const int delta = uni_degree(a) - uni_degree(b);
    UniPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (uni_degree(r) == 0) return Polynomial::constant(n, 1);
    a = b;
    b = uni_divide(r, g * h.pow(static_cast<unsigned>(delta)));
    g = uni_lead(a);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_divide(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  const Polynomial last = Polynomial::from_coefficients(n, var, b);
  return exact_divide(last, content_in(last, var));
}

}  // namespace

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = degree_sum(a), db = degree_sum(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars, 0);
  m.at(index) = power;
  return monomial(m, 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

const Monomial& Polynomial::leading_monomial() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  assert(!terms_.empty());
  return terms_.begin()->second;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : degree_sum(terms_.begin()->first);
}

int Polynomial::degree(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    nvars_ = other.nvars_;
    terms_ = other.terms_;
    return *this;
  }
  check_same_ring(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) nvars_ = other.nvars_;
  check_same_ring(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(std::max(a.nvars(), b.nvars()));
  check_same_ring(a, b);
  Polynomial r(a.nvars());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(add_exponents(ma, mb), ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.empty() || other.terms_.empty()) return terms_.empty() && other.terms_.empty();
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(nvars_, 1), base = *this;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

std::map<int, Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[var] = 0;
    auto [it, inserted] = out.try_emplace(m[var], nvars_);
    it->second.add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients(std::size_t nvars, std::size_t var,
                                         const std::map<int, Polynomial>& coeffs) {
  Polynomial p(nvars);
  for (const auto& [d, q] : coeffs) {
    for (const auto& [m, c] : q.terms()) {
      Monomial e = m;
      e[var] += d;
      p.add_term(e, c);
    }
  }
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial r = *this;
  r *= Rational(1) / leading_coefficient();
  return r;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 1;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    const bool negative = c < 0;
    if (negative)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    const bool unit_monomial = degree_sum(m) == 0;
    bool need_star = false;
    if (a != 1 || unit_monomial) {
      if (a.get_den() == 1)
        os << a.get_num();
      else
        os << "(" << a.get_num() << "/" << a.get_den() << ")";
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << names.at(i);
      if (m[i] != 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return Polynomial(std::max(a.nvars(), b.nvars()));
  check_same_ring(a, b);
  if (b.is_constant()) return a * (Rational(1) / b.leading_coefficient());
  Polynomial q(a.nvars()), r = a;
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!divides(lb, lr)) throw NotDivisible("polynomial is not an exact multiple");
    Monomial e(lr.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = lr[i] - lb[i];
    Polynomial t = Polynomial::monomial(e, r.leading_coefficient() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  check_same_ring(a, b);
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(n, 1);
  if (a.is_monomial()) return monomial_gcd(a.leading_monomial(), b);
  if (b.is_monomial()) return monomial_gcd(b.leading_monomial(), a);
  if (a == b) return a.monic();

  std::vector<int> da(n), db(n);
  std::size_t nvars_used = 0, main = 0;
  for (std::size_t v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
    if (da[v] > 0 || db[v] > 0) {
      ++nvars_used;
      main = v;
    }
  }
  if (da[main] == 0) return gcd(a, content_in(b, main));
  if (db[main] == 0) return gcd(content_in(a, main), b);
  if (nvars_used == 1) return univariate_gcd(a, b, main);

  const Polynomial ca = content_in(a, main), cb = content_in(b, main);
  const Polynomial pa = exact_divide(a, ca), pb = exact_divide(b, cb);
  const Polynomial c = gcd(ca, cb);
  const Polynomial g = subresultant_gcd(pa, pb, main);
  return (c * g).monic();
}

}  // namespace dynr

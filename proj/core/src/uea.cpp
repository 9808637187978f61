// SPDX-License-Identifier: Apache-2.0
#include "dynr/uea.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dynr/errors.hpp"

namespace dynr {

namespace {

void add_to(UEA::RationalPoly& p, const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

Rational rational_constant(const FieldElement& f, const std::string& what) {
  if (!f.is_constant()) throw InvalidInput(what + " must be a rational constant");
  return f.constant_value();
}

}  // namespace

UEA::UEA(LieAlgebra g, std::vector<std::size_t> order, int cap)
    : g_(std::move(g)), order_(std::move(order)), pos_of_basis_(g_.dim()), cap_(cap) {
  const std::size_t n = order_.size();
  for (std::size_t p = 0; p < n; ++p) pos_of_basis_[order_[p]] = p;
  bracket_.assign(n, std::vector<std::map<std::size_t, Rational>>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (const auto& [k, c] : g_.bracket(order_[p], order_[q]))
        bracket_[p][q][pos_of_basis_[k]] = rational_constant(c, "structure constant");
}

std::shared_ptr<const UEA> UEA::make(LieAlgebra g, const std::vector<std::string>& order, int degree_cap) {
  if (order.size() != g.dim()) throw InvalidInput("generator order must list every basis element once");
  std::vector<std::size_t> idx;
  std::set<std::size_t> seen;
  for (const auto& name : order) {
    const std::size_t i = g.index(name);
    if (!seen.insert(i).second) throw InvalidInput("generator " + name + " listed twice");
    idx.push_back(i);
  }
  return std::shared_ptr<const UEA>(new UEA(std::move(g), std::move(idx), degree_cap));
}

std::vector<std::string> UEA::gen_names() const {
  std::vector<std::string> out;
  for (std::size_t p = 0; p < ngens(); ++p) out.push_back(gen_name(p));
  return out;
}

std::size_t UEA::position(const std::string& name) const { return pos_of_basis_[g_.index(name)]; }

std::shared_ptr<const UEA> UEA::change_basis(const std::vector<std::string>& names,
                                             const std::vector<LieVector>& vectors) const {
  const std::size_t n = g_.dim();
  if (names.size() != n || vectors.size() != n) throw InvalidInput("new basis has wrong size");
  Matrix<Rational> m(n, n);  // column i = new generator i in old basis
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [k, c] : vectors[i]) m(k, i) = rational_constant(c, "basis change coefficient");
  const Matrix<Rational> inv = inverse(m);
  auto to_new = [&](const LieVector& v) {
    LieVector out;
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (const auto& [k, c] : v) s += inv(i, k) * rational_constant(c, "bracket");
      if (s != 0) out.emplace(i, FieldElement(s));
    }
    return out;
  };
  std::vector<LieAlgebra::Bracket> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      LieVector v = to_new(g_.bracket(vectors[i], vectors[j]));
      if (!v.empty()) brackets.push_back({i, j, std::move(v)});
    }
  std::optional<Matrix<FieldElement>> form;
  if (g_.has_form()) {
    form = Matrix<FieldElement>(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) (*form)(i, j) = g_.pairing(vectors[i], vectors[j]);
  }
  LieAlgebra h(names, brackets, form);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto child = std::shared_ptr<UEA>(new UEA(std::move(h), std::move(order), cap_));
  child->parent_ = shared_from_this();
  child->to_parent_.resize(n);
  child->from_parent_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (m(k, i) != 0) child->to_parent_[i][pos_of_basis_[k]] = m(k, i);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < n; ++i)
      if (inv(i, order_[p]) != 0) child->from_parent_[p][i] = inv(i, order_[p]);
  return child;
}

UEA::RationalPoly UEA::times_generator(const Exponent& m, std::size_t j) const {
  std::size_t k = m.size();
  for (std::size_t p = m.size(); p-- > 0;)
    if (m[p] > 0) {
      k = p;
      break;
    }
  if (k == m.size() || k <= j) {
    Exponent r = m;
    ++r[j];
    return {{r, Rational(1)}};
  }
  const auto key = std::make_pair(m, j);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  Exponent rest = m;
  --rest[k];
  RationalPoly out;
  // m g_j = rest g_j g_k + rest [g_k, g_j]
  for (const auto& [r, c] : times_generator(rest, j))
    for (const auto& [s, d] : times_generator(r, k)) add_to(out, s, c * d);
  for (const auto& [p, c] : bracket_[k][j])
    for (const auto& [s, d] : times_generator(rest, p)) add_to(out, s, c * d);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(key, out);
  return out;
}

UEA::RationalPoly UEA::multiply(const Exponent& m1, const Exponent& m2) const {
  if (total_degree(m1) + total_degree(m2) > cap_)
    throw InvalidInput("PBW product exceeds the degree cap " + std::to_string(cap_));
  RationalPoly cur{{m1, Rational(1)}};
  for (std::size_t p = 0; p < m2.size(); ++p)
    for (int e = 0; e < m2[p]; ++e) {
      RationalPoly next;
      for (const auto& [r, c] : cur)
        for (const auto& [s, d] : times_generator(r, p)) add_to(next, s, c * d);
      cur = std::move(next);
    }
  return cur;
}

UEATensor UEATensor::scalar(UEAPtr alg, std::size_t slots, const FieldElement& c) {
  UEATensor t(alg, slots);
  t.add_term(Key(slots, Exponent(alg->ngens(), 0)), c);
  return t;
}

UEATensor UEATensor::generator(UEAPtr alg, const std::string& name) {
  Exponent e(alg->ngens(), 0);
  e[alg->position(name)] = 1;
  return monomial(alg, {e});
}

UEATensor UEATensor::monomial(UEAPtr alg, Key key, const FieldElement& c) {
  UEATensor t(alg, key.size());
  for (const auto& e : key)
    if (e.size() != alg->ngens()) throw InvalidInput("exponent vector has wrong length");
  t.add_term(key, c);
  return t;
}

UEATensor UEATensor::from_lie(UEAPtr alg, const LieVector& v) {
  UEATensor t(alg, 1);
  for (const auto& [i, c] : v) t += c * generator(alg, alg->lie().name(i));
  return t;
}

FieldElement UEATensor::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? FieldElement() : it->second;
}

int UEATensor::degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (const auto& e : k) s += total_degree(e);
    d = std::max(d, s);
  }
  return d;
}

void UEATensor::add_term(const Key& k, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void UEATensor::check_compatible(const UEATensor& o) const {
  if (alg_ != o.alg_) throw InvalidInput("enveloping algebras differ");
  if (slots_ != o.slots_) throw InvalidInput("tensor slot counts differ");
}

UEATensor& UEATensor::operator+=(const UEATensor& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

UEATensor& UEATensor::operator-=(const UEATensor& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

UEATensor operator*(const FieldElement& s, const UEATensor& t) {
  UEATensor r(t.alg_, t.slots_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : t.terms_) r.terms_.emplace(k, s * c);
  return r;
}

bool UEATensor::operator==(const UEATensor& o) const { return (*this - o).is_zero(); }

UEATensor operator*(const UEATensor& a, const UEATensor& b) {
  a.check_compatible(b);
  const UEA& alg = *a.alg_;
  UEATensor out(a.alg_, a.slots_);
  std::vector<std::pair<UEATensor::Key, Rational>> partial, next;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      partial.assign(1, {UEATensor::Key{}, Rational(1)});
      for (std::size_t s = 0; s < a.slots_; ++s) {
        const auto prod = alg.multiply(ka[s], kb[s]);
        next.clear();
        for (const auto& [key, c] : partial)
          for (const auto& [e, d] : prod) {
            auto nk = key;
            nk.push_back(e);
            next.emplace_back(std::move(nk), c * d);
          }
        partial.swap(next);
      }
      const FieldElement cab = ca * cb;
      for (const auto& [key, c] : partial) out.add_term(key, cab * FieldElement(c));
    }
  return out;
}

UEATensor pbw_multiply(const UEATensor& a, const UEATensor& b) { return a * b; }

UEATensor UEATensor::pow(int n) const {
  if (n < 0) throw InvalidInput("negative power in U(g)");
  UEATensor r = scalar(alg_, slots_, 1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

UEATensor UEATensor::differentiate(const std::string& var) const {
  UEATensor r(alg_, slots_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.differentiate(var));
  return r;
}

UEATensor UEATensor::evaluate(const std::map<std::string, FieldElement>& bindings) const {
  UEATensor r(alg_, slots_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.evaluate(bindings));
  return r;
}

UEATensor tensor(const UEATensor& a, const UEATensor& b) {
  if (a.alg_ != b.alg_) throw InvalidInput("enveloping algebras differ");
  UEATensor r(a.alg_, a.slots_ + b.slots_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      auto k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add_term(k, ca * cb);
    }
  return r;
}

std::string UEATensor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (std::size_t s = 0; s < k.size(); ++s) {
      os << (s ? " ⊗ " : " ");
      bool any = false;
      for (std::size_t p = 0; p < k[s].size(); ++p) {
        if (k[s][p] == 0) continue;
        os << (any ? "*" : "") << alg_->gen_name(p);
        if (k[s][p] > 1) os << "^" << k[s][p];
        any = true;
      }
      if (!any) os << "1";
    }
  }
  return os.str();
}

namespace {

Rational binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

// Sum over 0 <= a <= e of prod C(e_i, a_i) a ⊗ (e - a).
std::vector<std::pair<std::pair<Exponent, Exponent>, Rational>> split_monomial(const Exponent& e) {
  std::vector<std::pair<std::pair<Exponent, Exponent>, Rational>> out;
  Exponent a(e.size(), 0);
  while (true) {
    Rational c = 1;
    Exponent b(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      c *= binomial(e[i], a[i]);
      b[i] = e[i] - a[i];
    }
    out.push_back({{a, b}, c});
    std::size_t i = 0;
    while (i < e.size() && a[i] == e[i]) a[i++] = 0;
    if (i == e.size()) break;
    ++a[i];
  }
  return out;
}

}  // namespace

UEATensor coproduct(const UEATensor& u, std::size_t slot) {
  if (slot >= u.slots()) throw InvalidInput("coproduct slot out of range");
  UEATensor r(u.algebra(), u.slots() + 1);
  for (const auto& [k, c] : u.terms())
    for (const auto& [ab, m] : split_monomial(k[slot])) {
      UEATensor::Key nk;
      for (std::size_t s = 0; s < k.size(); ++s) {
        if (s == slot) {
          nk.push_back(ab.first);
          nk.push_back(ab.second);
        } else {
          nk.push_back(k[s]);
        }
      }
      r.add_term(nk, c * FieldElement(m));
    }
  return r;
}

UEATensor counit(const UEATensor& u, std::size_t slot) {
  if (slot >= u.slots()) throw InvalidInput("counit slot out of range");
  UEATensor r(u.algebra(), u.slots() - 1);
  for (const auto& [k, c] : u.terms()) {
    if (total_degree(k[slot]) != 0) continue;
    UEATensor::Key nk = k;
    nk.erase(nk.begin() + static_cast<std::ptrdiff_t>(slot));
    r.add_term(nk, c);
  }
  return r;
}

FieldElement counit_value(const UEATensor& u) {
  FieldElement v;
  for (const auto& [k, c] : u.terms()) {
    bool trivial = true;
    for (const auto& e : k) trivial = trivial && total_degree(e) == 0;
    if (trivial) v += c;
  }
  return v;
}

UEATensor insert_unit(const UEATensor& u, std::size_t at) {
  if (at > u.slots()) throw InvalidInput("unit slot out of range");
  UEATensor r(u.algebra(), u.slots() + 1);
  for (const auto& [k, c] : u.terms()) {
    UEATensor::Key nk = k;
    nk.insert(nk.begin() + static_cast<std::ptrdiff_t>(at), Exponent(u.algebra()->ngens(), 0));
    r.add_term(nk, c);
  }
  return r;
}

UEATensor change_generators(const UEATensor& u, const UEAPtr& target) {
  const UEAPtr& src = u.algebra();
  const std::vector<std::map<std::size_t, Rational>>* images = nullptr;
  if (target->parent() == src)
    images = &target->from_parent();
  else if (src->parent() == target)
    images = &src->to_parent();
  else
    throw InvalidInput("algebras are not related by a basis change");
  std::vector<UEATensor> gen_images;
  for (const auto& img : *images) {
    UEATensor t(target, 1);
    for (const auto& [p, c] : img) {
      Exponent e(target->ngens(), 0);
      e[p] = 1;
      t.add_term({e}, FieldElement(c));
    }
    gen_images.push_back(std::move(t));
  }
  std::map<Exponent, UEATensor> cache;
  auto image_of = [&](const Exponent& e) -> const UEATensor& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    UEATensor r = UEATensor::scalar(target, 1, 1);
    for (std::size_t p = 0; p < e.size(); ++p)
      for (int k = 0; k < e[p]; ++k) r = r * gen_images[p];
    return cache.emplace(e, std::move(r)).first->second;
  };
  UEATensor out(target, u.slots());
  for (const auto& [k, c] : u.terms()) {
    UEATensor term = UEATensor::scalar(target, 0, c);
    for (const auto& e : k) term = tensor(term, image_of(e));
    out += term;
  }
  return out;
}

UEATensor project_along_ideal(const UEATensor& u, const std::vector<std::string>& ideal_gens) {
  const UEA& alg = *u.algebra();
  std::vector<bool> drop(alg.ngens(), false);
  for (const auto& name : ideal_gens) drop[alg.position(name)] = true;
  for (std::size_t p = 0; p + 1 < alg.ngens(); ++p)
    if (drop[p] && !drop[p + 1])
      throw InvalidInput("ideal generators must be rightmost in the PBW order");
  UEATensor r(u.algebra(), u.slots());
  for (const auto& [k, c] : u.terms()) {
    bool keep = true;
    for (const auto& e : k)
      for (std::size_t p = 0; p < e.size(); ++p) keep = keep && !(drop[p] && e[p] > 0);
    if (keep) r.add_term(k, c);
  }
  return r;
}

UEATensor project_zero(const UEATensor& u, const std::vector<std::string>& n_minus,
                       const std::vector<std::string>& n_plus) {
  const UEA& alg = *u.algebra();
  std::vector<int> cls(alg.ngens(), 1);  // 0: n_-, 1: h, 2: n_+
  for (const auto& name : n_minus) cls[alg.position(name)] = 0;
  for (const auto& name : n_plus) cls[alg.position(name)] = 2;
  if (!std::is_sorted(cls.begin(), cls.end()))
    throw InvalidInput("PBW order must be (n_-, h, n_+) for the (.)_0 projection");
  UEATensor r(u.algebra(), u.slots());
  for (const auto& [k, c] : u.terms()) {
    bool keep = true;
    for (const auto& e : k)
      for (std::size_t p = 0; p < e.size(); ++p) keep = keep && !(cls[p] != 1 && e[p] > 0);
    if (keep) r.add_term(k, c);
  }
  return r;
}

UEAPtr sl2_uea() {
  static const UEAPtr alg = UEA::make(sl2(), {"y", "h", "x"});
  return alg;
}

}  // namespace dynr

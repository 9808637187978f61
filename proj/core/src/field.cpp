// SPDX-License-Identifier: Apache-2.0
#include "dynr/field.hpp"

#include <cctype>
#include <sstream>

#include "dynr/errors.hpp"

namespace dynr {

ContextPtr Context::make(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw InvalidInput("empty parameter name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw InvalidInput("duplicate parameter name " + names[i]);
  }
  return ContextPtr(new Context(std::move(names)));
}

std::optional<std::size_t> Context::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Context::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownParameter("unknown parameter '" + std::string(name) + "'");
}

FieldElement::FieldElement(const Rational& value)
    : num_(Polynomial::constant(0, value)), den_(Polynomial::constant(0, 1)) {}

FieldElement::FieldElement(ContextPtr ctx, Polynomial num, Polynomial den, bool canonical)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
  if (!canonical) canonicalize();
}

FieldElement FieldElement::constant(const ContextPtr& ctx, const Rational& value) {
  const std::size_t n = ctx ? ctx->size() : 0;
  return FieldElement(ctx, Polynomial::constant(n, value), Polynomial::constant(n, 1), true);
}

FieldElement FieldElement::variable(const ContextPtr& ctx, std::string_view name) {
  if (!ctx) throw UnknownParameter("no parameter context for '" + std::string(name) + "'");
  const std::size_t n = ctx->size();
  return FieldElement(ctx, Polynomial::variable(n, ctx->require(name)), Polynomial::constant(n, 1),
                      true);
}

FieldElement FieldElement::fraction(const ContextPtr& ctx, Polynomial num, Polynomial den) {
  const std::size_t n = ctx ? ctx->size() : 0;
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  if ((!num.is_zero() && num.nvars() != n) || den.nvars() != n)
    throw ContextMismatch("polynomial ring does not match context");
  if (num.is_zero()) num = Polynomial(n);
  return FieldElement(ctx, std::move(num), std::move(den), false);
}

void FieldElement::canonicalize() {
  const std::size_t n = den_.nvars();
  if (num_.is_zero()) {
    num_ = Polynomial(n);
    den_ = Polynomial::constant(n, 1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

ContextPtr FieldElement::common_context(const FieldElement& a, const FieldElement& b) {
  if (a.ctx_ == b.ctx_) return a.ctx_;
  if (!a.ctx_) return b.ctx_;
  if (!b.ctx_) return a.ctx_;
  throw ContextMismatch("field elements belong to different parameter contexts");
}

FieldElement FieldElement::promoted(const ContextPtr& ctx) const {
  if (ctx_ == ctx) return *this;
  if (ctx_) throw ContextMismatch("field elements belong to different parameter contexts");
  return constant(ctx, constant_value());
}

bool FieldElement::is_one() const {
  return den_.is_constant() && num_.is_constant() && num_.constant_term() == 1;
}

Rational FieldElement::constant_value() const {
  if (!is_constant()) throw InvalidInput("field element " + to_string() + " is not a constant");
  return num_.constant_term() / den_.constant_term();
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  const ContextPtr ctx = common_context(*this, other);
  if (other.is_zero()) return *this = promoted(ctx);
  if (is_zero()) return *this = other.promoted(ctx);
  FieldElement a = promoted(ctx);
  const FieldElement b = other.promoted(ctx);
  if (a.den_.is_constant() && b.den_.is_constant()) {
    a.num_ += b.num_;
    if (a.num_.is_zero()) a.num_ = Polynomial(a.den_.nvars());
    return *this = std::move(a);
  }
  if (a.den_ == b.den_) {
    a.num_ += b.num_;
    a.canonicalize();
    return *this = std::move(a);
  }
  const Polynomial g = gcd(a.den_, b.den_);
  const Polynomial da = exact_divide(a.den_, g), db = exact_divide(b.den_, g);
  a.num_ = a.num_ * db + b.num_ * da;
  a.den_ = a.den_ * db;
  a.canonicalize();
  return *this = std::move(a);
}

FieldElement& FieldElement::operator-=(const FieldElement& other) { return *this += -other; }

FieldElement& FieldElement::operator*=(const Rational& c) {
  if (c == 0) return *this = constant(ctx_, 0);
  num_ *= c;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  const ContextPtr ctx = common_context(*this, other);
  if (is_zero() || other.is_zero()) return *this = constant(ctx, 0);
  if (other.is_constant()) {
    *this = promoted(ctx);
    return *this *= other.constant_value();
  }
  if (is_constant()) {
    const Rational c = constant_value();
    *this = other.promoted(ctx);
    return *this *= c;
  }
  const FieldElement& a = *this;
  const FieldElement& b = other;
  const Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  Polynomial num = exact_divide(a.num_, g1) * exact_divide(b.num_, g2);
  Polynomial den = exact_divide(a.den_, g2) * exact_divide(b.den_, g1);
  const Rational lc = den.leading_coefficient();
  if (lc != 1) {
    num *= Rational(1) / lc;
    den *= Rational(1) / lc;
  }
  return *this = FieldElement(ctx, std::move(num), std::move(den), true);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in field");
  Polynomial num = den_, den = num_;
  const Rational lc = den.leading_coefficient();
  num *= Rational(1) / lc;
  den *= Rational(1) / lc;
  return FieldElement(ctx_, std::move(num), std::move(den), true);
}

FieldElement& FieldElement::operator/=(const FieldElement& other) { return *this *= other.inverse(); }

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.num_ = -r.num_;
  return r;
}

bool FieldElement::operator==(const FieldElement& other) const {
  const ContextPtr ctx = common_context(*this, other);
  if (ctx_ == other.ctx_) return num_ == other.num_ && den_ == other.den_;
  const FieldElement a = promoted(ctx), b = other.promoted(ctx);
  return a.num_ == b.num_ && a.den_ == b.den_;
}

FieldElement FieldElement::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  const auto e = static_cast<unsigned>(n);
  return FieldElement(ctx_, num_.pow(e), den_.pow(e), true);
}

FieldElement FieldElement::differentiate(std::string_view var) const {
  if (!ctx_) return FieldElement();
  const std::size_t i = ctx_->require(var);
  Polynomial num = num_.derivative(i) * den_ - num_ * den_.derivative(i);
  if (num.is_zero()) return constant(ctx_, 0);
  return FieldElement(ctx_, std::move(num), den_ * den_, false);
}

namespace {

FieldElement evaluate_polynomial(const ContextPtr& ctx, const Polynomial& p,
                                 const std::vector<std::optional<FieldElement>>& values) {
  FieldElement sum = FieldElement::constant(ctx, 0);
  const std::size_t n = ctx->size();
  for (const auto& [m, c] : p.terms()) {
    Monomial kept(n, 0);
    FieldElement factor = FieldElement::constant(ctx, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      if (values[i])
        factor *= values[i]->pow(m[i]);
      else
        kept[i] = m[i];
    }
    factor *= FieldElement::fraction(ctx, Polynomial::monomial(kept, 1), Polynomial::constant(n, 1));
    sum += factor;
  }
  return sum;
}

}  // namespace

FieldElement FieldElement::evaluate(const std::map<std::string, FieldElement>& bindings) const {
  if (bindings.empty()) return *this;
  if (!ctx_) return *this;
  std::vector<std::optional<FieldElement>> values(ctx_->size());
  for (const auto& [name, value] : bindings) values[ctx_->require(name)] = value.promoted(ctx_);
  const FieldElement den = evaluate_polynomial(ctx_, den_, values);
  if (den.is_zero()) throw PoleError("denominator of " + to_string() + " vanishes under binding");
  return evaluate_polynomial(ctx_, num_, values) / den;
}

std::string FieldElement::to_string() const {
  static const std::vector<std::string> no_names;
  const std::vector<std::string>& names = ctx_ ? ctx_->names() : no_names;
  if (is_zero()) return "0";
  // Scale to coprime integer coefficients with a positive leading denominator coefficient.
  Integer lcm = 1, g = 0;
  for (const Polynomial* p : {&num_, &den_})
    for (const auto& [m, c] : p->terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  for (const Polynomial* p : {&num_, &den_})
    for (const auto& [m, c] : p->terms()) {
      Integer v = c.get_num() * (lcm / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  const Rational scale = Rational(lcm, g);
  const Polynomial n = num_ * scale, d = den_ * scale;
  if (d.is_constant() && d.constant_term() == 1) return n.to_string(names);
  std::string out = n.is_monomial() ? n.to_string(names) : "(" + n.to_string(names) + ")";
  bool single_factor = d.is_constant();
  if (d.is_monomial() && d.leading_coefficient() == 1) {
    int vars = 0;
    for (int e : d.leading_monomial()) vars += e > 0;
    single_factor = vars == 1;
  }
  out += "/";
  out += single_factor ? d.to_string(names) : "(" + d.to_string(names) + ")";
  return out;
}

namespace {

class Parser {
 public:
  Parser(const ContextPtr& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  FieldElement parse() {
    FieldElement v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidInput("cannot parse field element '" + std::string(text_) + "': " + msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElement expr() {
    FieldElement v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  FieldElement term() {
    FieldElement v = unary();
    for (;;) {
      if (accept('*'))
        v *= unary();
      else if (accept('/'))
        v /= unary();
      else
        return v;
    }
  }

  FieldElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  FieldElement power() {
    FieldElement base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return base.pow(negative ? -e : e);
  }

  FieldElement atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElement v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return FieldElement::constant(ctx_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return FieldElement::variable(ctx_, text_.substr(start, pos_ - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const ContextPtr& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement FieldElement::parse(const ContextPtr& ctx, std::string_view text) {
  return Parser(ctx, text).parse();
}

SeriesCoefficients series_expand(const FieldElement& f, std::string_view var, std::size_t order) {
  const ContextPtr& ctx = f.context();
  if (!ctx) {
    SeriesCoefficients s{std::string(var), std::vector<FieldElement>(order + 1)};
    s.coefficients[0] = f;
    return s;
  }
  const std::size_t i = ctx->require(var);
  const std::size_t n = ctx->size();
  const auto num = f.numerator().coefficients_in(i);
  const auto den = f.denominator().coefficients_in(i);
  auto coeff = [&](const std::map<int, Polynomial>& m, std::size_t k) {
    auto it = m.find(static_cast<int>(k));
    if (it == m.end()) return FieldElement::constant(ctx, 0);
    return FieldElement::fraction(ctx, it->second, Polynomial::constant(n, 1));
  };
  const FieldElement d0 = coeff(den, 0);
  if (d0.is_zero())
    throw PoleError("cannot expand " + f.to_string() + ": pole at " + std::string(var) + " = 0");
  const FieldElement d0_inv = d0.inverse();
  SeriesCoefficients out{std::string(var), {}};
  out.coefficients.reserve(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    FieldElement c = coeff(num, k);
    for (std::size_t j = 1; j <= k; ++j) {
      const FieldElement dj = coeff(den, j);
      if (!dj.is_zero()) c -= dj * out.coefficients[k - j];
    }
    out.coefficients.push_back(c * d0_inv);
  }
  return out;
}

FieldElement resum(const ContextPtr& ctx, const SeriesCoefficients& s) {
  const FieldElement x = FieldElement::variable(ctx, s.variable);
  FieldElement sum = FieldElement::constant(ctx, 0), power = FieldElement::constant(ctx, 1);
  for (const auto& c : s.coefficients) {
    sum += c * power;
    power *= x;
  }
  return sum;
}

}  // namespace dynr

// SPDX-License-Identifier: Apache-2.0
#include "dynr/tensor.hpp"

#include <sstream>

#include "dynr/errors.hpp"

namespace dynr {

Tensor2 flip(const Tensor2& t) { return t.permuted({1, 0}); }

Tensor2 symmetric_part(const Tensor2& t) { return FieldElement(Rational(1, 2)) * (t + flip(t)); }

Tensor2 antisymmetric_part(const Tensor2& t) { return FieldElement(Rational(1, 2)) * (t - flip(t)); }

Tensor2 outer(const LieVector& a, const LieVector& b) {
  Tensor2 t;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) t.add_term({i, j}, ca * cb);
  return t;
}

Tensor2 build_casimir_tensor(const LieAlgebra& g) {
  Matrix<FieldElement> inv;
  try {
    inv = inverse(g.form());
  } catch (const SingularSystem&) {
    throw InvalidInput("invariant form is degenerate");
  }
  Tensor2 omega;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) omega.add_term({i, j}, inv(i, j));
  return omega;
}

Tensor3 cyb(const LieAlgebra& g, const Tensor2& r) {
  Tensor3 out;
  for (const auto& [p, a] : r.terms())
    for (const auto& [q, b] : r.terms()) {
      const FieldElement ab = a * b;
      const auto [i, j] = p;
      const auto [k, l] = q;
      // [r12, r13]
      for (const auto& [m, c] : g.bracket(i, k)) out.add_term({m, j, l}, ab * c);
      // [r12, r23]
      for (const auto& [m, c] : g.bracket(j, k)) out.add_term({i, m, l}, ab * c);
      // [r13, r23]
      for (const auto& [m, c] : g.bracket(j, l)) out.add_term({i, k, m}, ab * c);
    }
  return out;
}

Tensor3 alt(const Tensor3& t) {
  // a⊗b⊗c -> a⊗b⊗c + c⊗a⊗b + b⊗c⊗a
  return t + t.permuted({2, 0, 1}) + t.permuted({1, 2, 0});
}

Tensor3 dynamical_differential(const Tensor2& r,
                               const std::vector<std::pair<std::size_t, std::string>>& coords) {
  Tensor3 out;
  for (const auto& [e, var] : coords) {
    const Tensor2 d = r.differentiate(var);
    for (const auto& [k, c] : d.terms()) out.add_term({e, k[0], k[1]}, c);
  }
  return out;
}

namespace {

template <std::size_t K>
std::string render(const LieAlgebra& g, const Tensor<K>& t) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")*";
    for (std::size_t s = 0; s < K; ++s) os << (s ? "⊗" : "") << g.name(k[s]);
  }
  return os.str();
}

}  // namespace

std::string to_string(const LieAlgebra& g, const Tensor2& t) { return render(g, t); }
std::string to_string(const LieAlgebra& g, const Tensor3& t) { return render(g, t); }

}  // namespace dynr

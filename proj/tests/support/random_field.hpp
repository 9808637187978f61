// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>

#include "dynr/field.hpp"

namespace testsupport {

/// Small random polynomials and rational functions for property tests.
class RandomField {
 public:
  RandomField(dynr::ContextPtr ctx, std::mt19937& rng) : ctx_(std::move(ctx)), rng_(rng) {}

  dynr::Polynomial polynomial(int max_degree) {
    const std::size_t n = ctx_->size();
    dynr::Polynomial p(n);
    std::uniform_int_distribution<int> nterms(1, 3), coeff(-4, 4), exp(0, max_degree);
    const int k = nterms(rng_);
    for (int t = 0; t < k; ++t) {
      dynr::Monomial m(n, 0);
      int budget = max_degree;
      for (std::size_t i = 0; i < n && budget > 0; ++i) {
        m[i] = std::min(exp(rng_), budget);
        budget -= m[i];
      }
      p.add_term(m, coeff(rng_));
    }
    return p;
  }

  dynr::FieldElement element() {
    dynr::Polynomial num = polynomial(2), den;
    do {
      den = polynomial(2);
    } while (den.is_zero());
    if (num.is_zero()) num = dynr::Polynomial(ctx_->size());
    return dynr::FieldElement::fraction(ctx_, num, den);
  }

 private:
  dynr::ContextPtr ctx_;
  std::mt19937& rng_;
};

}  // namespace testsupport

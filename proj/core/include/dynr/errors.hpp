// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dynr {

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// A substitution or expansion hit a vanishing denominator.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

class UnknownParameter : public std::invalid_argument {
 public:
  explicit UnknownParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// Elements from two different parameter contexts were combined.
class ContextMismatch : public std::logic_error {
 public:
  explicit ContextMismatch(const std::string& what) : std::logic_error(what) {}
};

class NotDivisible : public std::domain_error {
 public:
  explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

/// Input violates a documented precondition (bad root subset, wrong generator order, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// r + r^21 differs from the Casimir tensor.
class QuasiUnitarityError : public std::domain_error {
 public:
  explicit QuasiUnitarityError(const std::string& what) : std::domain_error(what) {}
};

class SingularSystem : public std::domain_error {
 public:
  explicit SingularSystem(const std::string& what) : std::domain_error(what) {}
};

}  // namespace dynr

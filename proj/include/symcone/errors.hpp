#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace symcone {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold
/// (dimension overflow, malformed permutation, n < r, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Input lies outside the hypotheses an operation is proved for
/// (mixed signs, non-integral coordinates, non-members).
class RejectedInput : public Error {
public:
  using Error::Error;
};

/// A point outside the cone it was required to lie in. Carries a normal a of
/// the cone with <a, point> < 0 (or != 0 for an equation).
class NonMemberError : public RejectedInput {
public:
  NonMemberError(const std::string& what, std::vector<mpz_class> normal)
      : RejectedInput(what), normal_(std::move(normal)) {}
  const std::vector<mpz_class>& normal() const { return normal_; }

private:
  std::vector<mpz_class> normal_;
};

/// A configured resource cap (orbit size, LP budget, enumeration budget,
/// machine-integer range) was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// Text that does not parse as an exact rational or as the JSON schema.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace symcone

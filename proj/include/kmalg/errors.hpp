#pragma once

#include <stdexcept>
#include <string>

#include "kmalg/rational.hpp"

namespace kmalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial or operator grew past the configured degree cap.
class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(int degree, int cap);
  int degree() const { return degree_; }
  int cap() const { return cap_; }

 private:
  int degree_;
  int cap_;
};

/// Exact division left a nonzero remainder.
class InexactDivision : public Error {
 public:
  explicit InexactDivision(std::string remainder);
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

/// The two branches of a glued pair disagree at jet index `index`.
class JetMismatch : public Error {
 public:
  JetMismatch(int index, const Rational& lhs, const Rational& rhs);
  int index() const { return index_; }

 private:
  int index_;
};

/// Operands live on different spaces K_m.
class SpaceMismatch : public Error {
 public:
  SpaceMismatch(int lhs_m, int rhs_m);
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A closure property that always holds mathematically failed at runtime. Seeing
/// this means there is a bug in the library, not in the input.
class ClosureViolation : public Error {
 public:
  using Error::Error;
};

/// Global bound on polynomial degrees produced by operations that can grow
/// degree (composition, products, plane restriction).
struct Limits {
  int max_degree = 32;
};

}  // namespace kmalg

#include "kmalg/errors.hpp"

namespace kmalg {

DegreeCapExceeded::DegreeCapExceeded(int degree, int cap)
    : Error("degree " + std::to_string(degree) + " exceeds the degree cap " + std::to_string(cap)),
      degree_(degree),
      cap_(cap) {}

InexactDivision::InexactDivision(std::string remainder)
    : Error("division is not exact: remainder " + remainder), remainder_(std::move(remainder)) {}

JetMismatch::JetMismatch(int index, const Rational& lhs, const Rational& rhs)
    : Error("jets differ at index " + std::to_string(index) + ": " + lhs.str() + " vs " + rhs.str()),
      index_(index) {}

SpaceMismatch::SpaceMismatch(int lhs_m, int rhs_m)
    : Error("space mismatch: K" + std::to_string(lhs_m) + " vs K" + std::to_string(rhs_m)) {}

}  // namespace kmalg

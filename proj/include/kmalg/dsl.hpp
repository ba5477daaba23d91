#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kmalg/diffop.hpp"
#include "kmalg/glued.hpp"
#include "kmalg/poly2.hpp"
#include "kmalg/spectra.hpp"
#include "kmalg/symbols.hpp"

namespace kmalg::dsl {

/// Malformed or invalid input, with a 1-based source location.
class DslError : public Error {
 public:
  DslError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// `op order=<k>` block with its `coeff <i>: <poly>` lines.
struct OpBlock {
  BranchOp op;
  int declared_order;
  friend bool operator==(const OpBlock&, const OpBlock&) = default;
};

/// `branch x` block followed by a `branch y` block.
struct PairedBlock {
  OpBlock x;
  OpBlock y;
  [[nodiscard]] int declared_order() const { return std::max(x.declared_order, y.declared_order); }
  friend bool operator==(const PairedBlock&, const PairedBlock&) = default;
};

/// `symbol deg=<k> m=<m>: <a> | <b>` as written; membership in S_k is
/// checked by the caller.
struct SymbolText {
  int degree;
  Poly a;
  Poly b;
  SpaceSpec space;
  friend bool operator==(const SymbolText&, const SymbolText&) = default;
};

using Value =
    std::variant<Poly, Poly2, GluedFunction, OpBlock, PairedBlock, SymbolText, Character>;

/// Univariate polynomial in x or y (not both), e.g. `3/2*x^2 - x + 1`.
Poly parse_poly(std::string_view text);

/// Polynomial in x and y, e.g. `x*y + 2*x^2*y^3`.
Poly2 parse_poly2(std::string_view text);

/// Every value in a source text, in order. A bare expression line is a Poly
/// when it does not mention y and a Poly2 otherwise.
std::vector<Value> parse_document(std::string_view text, const Limits& limits = {});

/// Exactly one value.
Value parse_dsl(std::string_view text, const Limits& limits = {});

/// Text that parse_dsl maps back to an equal value.
std::string to_dsl(const Value& value);
std::string to_dsl(const SymbolElem& s);
std::string to_dsl(const BranchOp& op, int declared_order, char var = 'x');

/// Name of the alternative held by `value` ("poly", "pair", "op", ...).
std::string kind_name(const Value& value);

}  // namespace kmalg::dsl

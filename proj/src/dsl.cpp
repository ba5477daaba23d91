#include "kmalg/dsl.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace kmalg::dsl {

DslError::DslError(int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column) {}

namespace {

// Cursor over one source line. Columns are reported 1-based and relative to
// the full line even when scanning a suffix.
class Cursor {
 public:
  Cursor(std::string_view text, int line, int column_offset = 0)
      : s_(text), line_(line), offset_(column_offset) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) {
      return false;
    }
    pos_ = end;
    return true;
  }
  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("expected '" + std::string(w) + "'");
  }
  int integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  Rational rational() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    try {
      return Rational::parse(s_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      pos_ = start;
      fail(std::string("bad rational: ") + e.what());
    }
  }
  // Unsigned rational literal starting at the cursor, if any.
  std::optional<Rational> maybe_unsigned_rational() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
    return rational();
  }
  std::string_view rest() {
    skip_ws();
    return s_.substr(pos_);
  }
  int column() const { return offset_ + static_cast<int>(pos_) + 1; }
  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw DslError(line_, column(), message);
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
  int line_;
  int offset_;
};

struct Term {
  Rational coeff;
  int x_exp = 0;
  int y_exp = 0;
};

// poly := ['+'|'-'] mono (('+'|'-') mono)*
// mono := rational ['*'] factor ('*' factor)* | rational | factor ('*' factor)*
// factor := ('x'|'y') ['^' INT]
std::vector<Term> parse_terms(Cursor& cur) {
  std::vector<Term> out;
  bool first = true;
  while (true) {
    Rational sign(1);
    if (cur.accept('-')) {
      sign = Rational(-1);
    } else if (!cur.accept('+') && !first) {
      break;
    }
    first = false;
    Term t{sign};
    bool any = false;
    if (auto c = cur.maybe_unsigned_rational()) {
      t.coeff *= *c;
      any = true;
      if (cur.peek() == '*') {
        cur.accept('*');
        char v = cur.peek();
        if (v != 'x' && v != 'y') cur.fail("expected x or y after '*'");
      }
    }
    while (cur.peek() == 'x' || cur.peek() == 'y') {
      char v = cur.peek();
      cur.accept(v);
      int e = 1;
      if (cur.accept('^')) e = cur.integer();
      (v == 'x' ? t.x_exp : t.y_exp) += e;
      any = true;
      if (cur.peek() == '*') {
        cur.accept('*');
        char nv = cur.peek();
        if (nv != 'x' && nv != 'y') cur.fail("expected x or y after '*'");
      }
    }
    if (!any) cur.fail("expected a term");
    out.push_back(t);
    char next = cur.peek();
    if (next != '+' && next != '-') break;
  }
  return out;
}

Poly2 terms_to_poly2(const std::vector<Term>& terms, Cursor& cur, const Limits& limits) {
  Poly2 out;
  for (const auto& t : terms) {
    if (t.x_exp + t.y_exp > limits.max_degree) {
      cur.fail("term degree " + std::to_string(t.x_exp + t.y_exp) + " exceeds the degree cap " +
               std::to_string(limits.max_degree));
    }
    out += Poly2::monomial(t.coeff, t.x_exp, t.y_exp);
  }
  return out;
}

// Univariate expression; the variable may be written x or y but not both.
Poly parse_univariate(Cursor& cur, const Limits& limits) {
  auto terms = parse_terms(cur);
  bool has_x = false;
  bool has_y = false;
  for (const auto& t : terms) {
    has_x = has_x || t.x_exp > 0;
    has_y = has_y || t.y_exp > 0;
  }
  if (has_x && has_y) cur.fail("branch polynomial mixes x and y");
  Poly out;
  for (const auto& t : terms) {
    int e = t.x_exp + t.y_exp;
    if (e > limits.max_degree) {
      cur.fail("degree " + std::to_string(e) + " exceeds the degree cap " +
               std::to_string(limits.max_degree));
    }
    out += Poly::monomial(t.coeff, e);
  }
  return out;
}

void expect_end(Cursor& cur) {
  if (!cur.done()) cur.fail("unexpected text '" + std::string(cur.rest()) + "'");
}

struct Line {
  std::string_view text;
  int number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    bool blank = true;
    for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) out.push_back({line, number});
    if (end == text.size()) break;
  }
  return out;
}

// Two branch polynomials separated by '|'.
std::pair<Poly, Poly> parse_branch_pair(Cursor& cur, const Limits& limits) {
  Poly f = parse_univariate(cur, limits);
  cur.expect('|');
  Poly g = parse_univariate(cur, limits);
  expect_end(cur);
  return {std::move(f), std::move(g)};
}

OpBlock parse_op_block(const std::vector<Line>& lines, size_t& i, const Limits& limits) {
  Cursor head(lines[i].text, lines[i].number);
  head.expect_word("op");
  head.expect_word("order");
  head.expect('=');
  int order = head.integer();
  expect_end(head);
  ++i;
  std::vector<Poly> coeffs(static_cast<size_t>(order) + 1);
  std::vector<bool> seen(coeffs.size());
  while (i < lines.size()) {
    Cursor cur(lines[i].text, lines[i].number);
    if (!cur.accept_word("coeff")) break;
    int col = cur.column();
    int idx = cur.integer();
    if (idx > order) {
      throw DslError(cur.line(), col,
                     "coefficient index " + std::to_string(idx) + " exceeds declared order " +
                         std::to_string(order));
    }
    if (seen[static_cast<size_t>(idx)]) {
      throw DslError(cur.line(), col, "duplicate coefficient " + std::to_string(idx));
    }
    seen[static_cast<size_t>(idx)] = true;
    cur.expect(':');
    coeffs[static_cast<size_t>(idx)] = parse_univariate(cur, limits);
    expect_end(cur);
    ++i;
  }
  return {BranchOp(std::move(coeffs)), order};
}

Value parse_one(const std::vector<Line>& lines, size_t& i, const Limits& limits) {
  const Line& line = lines[i];
  Cursor cur(line.text, line.number);
  if (cur.accept_word("pair")) {
    cur.expect_word("m");
    cur.expect('=');
    int m = cur.integer();
    cur.expect(':');
    int col = cur.column();
    auto [f, g] = parse_branch_pair(cur, limits);
    ++i;
    try {
      return make_glued(std::move(f), std::move(g), SpaceSpec(m));
    } catch (const JetMismatch& e) {
      throw DslError(line.number, col, e.what());
    }
  }
  if (cur.accept_word("symbol")) {
    cur.expect_word("deg");
    cur.expect('=');
    int deg = cur.integer();
    cur.expect_word("m");
    cur.expect('=');
    int m = cur.integer();
    cur.expect(':');
    auto [a, b] = parse_branch_pair(cur, limits);
    ++i;
    return SymbolText{deg, std::move(a), std::move(b), SpaceSpec(m)};
  }
  if (cur.accept_word("char")) {
    cur.expect_word("branch");
    cur.expect('=');
    Branch branch = Branch::kSingular;
    if (cur.accept_word("1")) {
      branch = Branch::kOne;
    } else if (cur.accept_word("2")) {
      branch = Branch::kTwo;
    } else if (!cur.accept_word("sing")) {
      cur.fail("branch must be 1, 2 or sing");
    }
    cur.expect_word("at");
    cur.expect('=');
    int col = cur.column();
    Rational at = cur.rational();
    expect_end(cur);
    if (branch == Branch::kSingular && !at.is_zero()) {
      throw DslError(line.number, col, "the singular character sits at 0");
    }
    ++i;
    return Character::at(branch, at);
  }
  if (cur.accept_word("branch")) {
    if (!cur.accept_word("x")) cur.fail("expected 'branch x' before 'branch y'");
    expect_end(cur);
    ++i;
    if (i >= lines.size()) throw DslError(line.number, 1, "missing op block after 'branch x'");
    OpBlock x = parse_op_block(lines, i, limits);
    if (i >= lines.size()) throw DslError(line.number, 1, "missing 'branch y' block");
    Cursor ycur(lines[i].text, lines[i].number);
    ycur.expect_word("branch");
    ycur.expect_word("y");
    expect_end(ycur);
    ++i;
    if (i >= lines.size()) {
      throw DslError(lines[i - 1].number, 1, "missing op block after 'branch y'");
    }
    OpBlock y = parse_op_block(lines, i, limits);
    return PairedBlock{std::move(x), std::move(y)};
  }
  if (cur.accept_word("op")) return parse_op_block(lines, i, limits);
  if (cur.accept_word("coeff")) cur.fail("'coeff' line outside an op block");

  // Bare expression.
  Cursor expr(line.text, line.number);
  auto terms = parse_terms(expr);
  expect_end(expr);
  ++i;
  Poly2 plane = terms_to_poly2(terms, expr, limits);
  if (plane.y_degree() <= 0) return plane.at_y_zero();
  return plane;
}

}  // namespace

Poly parse_poly(std::string_view text) {
  Cursor cur(text, 1);
  Poly p = parse_univariate(cur, Limits{});
  expect_end(cur);
  return p;
}

Poly2 parse_poly2(std::string_view text) {
  Cursor cur(text, 1);
  auto terms = parse_terms(cur);
  expect_end(cur);
  return terms_to_poly2(terms, cur, Limits{});
}

std::vector<Value> parse_document(std::string_view text, const Limits& limits) {
  auto lines = split_lines(text);
  std::vector<Value> out;
  size_t i = 0;
  while (i < lines.size()) {
    try {
      out.push_back(parse_one(lines, i, limits));
    } catch (const DslError&) {
      throw;
    } catch (const Error& e) {
      throw DslError(lines[i < lines.size() ? i : lines.size() - 1].number, 1, e.what());
    }
  }
  return out;
}

Value parse_dsl(std::string_view text, const Limits& limits) {
  auto values = parse_document(text, limits);
  if (values.size() != 1) {
    throw DslError(1, 1, "expected exactly one value, found " + std::to_string(values.size()));
  }
  return std::move(values.front());
}

std::string to_dsl(const BranchOp& op, int declared_order, char var) {
  std::ostringstream os;
  os << "op order=" << declared_order << '\n';
  for (int i = op.order(); i >= 0; --i) {
    if (!op.coeff(i).is_zero()) os << "coeff " << i << ": " << op.coeff(i).str(var) << '\n';
  }
  return os.str();
}

std::string to_dsl(const SymbolElem& s) { return s.str(); }

std::string to_dsl(const Value& value) {
  struct Visitor {
    std::string operator()(const Poly& p) const { return p.str(); }
    std::string operator()(const Poly2& p) const { return p.str(); }
    std::string operator()(const GluedFunction& u) const { return u.str(); }
    std::string operator()(const OpBlock& b) const { return to_dsl(b.op, b.declared_order); }
    std::string operator()(const PairedBlock& b) const {
      return "branch x\n" + to_dsl(b.x.op, b.x.declared_order, 'x') + "branch y\n" +
             to_dsl(b.y.op, b.y.declared_order, 'y');
    }
    std::string operator()(const SymbolText& s) const {
      return "symbol deg=" + std::to_string(s.degree) +
             " m=" + std::to_string(s.space.contact_order()) + ": " + s.a.str('x') + " | " +
             s.b.str('y');
    }
    std::string operator()(const Character& c) const { return c.str(); }
  };
  return std::visit(Visitor{}, value);
}

std::string kind_name(const Value& value) {
  static constexpr const char* kNames[] = {"poly", "plane", "pair", "op", "paired", "symbol", "char"};
  return kNames[value.index()];
}

}  // namespace kmalg::dsl

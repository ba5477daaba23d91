#include "kmalg/conditions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace kmalg {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// In-place reduced row-echelon form; zero rows are dropped.
void reduce_rows(Matrix& rows, size_t ncols) {
  size_t rank = 0;
  for (size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    Rational inv = Rational(1) / rows[rank][c];
    for (size_t j = c; j < ncols; ++j) rows[rank][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c].is_zero()) continue;
      Rational factor = rows[i][c];
      for (size_t j = c; j < ncols; ++j) {
        if (!rows[rank][j].is_zero()) rows[i][j] -= factor * rows[rank][j];
      }
    }
    ++rank;
  }
  rows.resize(rank);
}

size_t pivot_of(const std::vector<Rational>& row) {
  for (size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) return j;
  }
  return row.size();
}

std::tuple<int, int, int> reading_key(const JetVar& v) {
  return {v.index, v.deriv, v.side == Side::kA ? 0 : 1};
}

std::string coefficient_prefix(const Rational& c, bool leading) {
  std::string out;
  if (leading) {
    if (c.sign() < 0) out += "-";
  } else {
    out += c.sign() < 0 ? " - " : " + ";
  }
  Rational mag = c.abs();
  if (!mag.is_one()) out += mag.str() + "*";
  return out;
}

ConditionSet build_operator_conditions(int m, int k) {
  std::vector<JetVar> cols = operator_unknowns(m, k);
  auto col = [&](Side side, int s, int r) {
    JetVar v{side, s, r};
    return static_cast<size_t>(std::find(cols.begin(), cols.end(), v) - cols.begin());
  };
  Matrix rows;
  // (Delta f)^(i)(0) = sum_s sum_{r <= i} C(i, r) a_s^(r)(0) f^(s + i - r)(0),
  // and for f = x^n only s + i - r = n survives, weighted by n!.
  auto add_row = [&](int i, int n, bool on_a, bool on_b) {
    std::vector<Rational> row(cols.size());
    bool any = false;
    for (int s = 0; s <= k; ++s) {
      int r = s + i - n;
      if (r < 0 || r > i) continue;
      Rational w = binomial(i, r) * factorial(n);
      if (on_a) row[col(Side::kA, s, r)] += w;
      if (on_b) row[col(Side::kB, s, r)] -= w;
      any = true;
    }
    if (any) rows.push_back(std::move(row));
  };
  for (int i = 0; i <= m; ++i) {
    for (int n = 0; n <= k + m; ++n) add_row(i, n, true, true);
    for (int j = 0; j <= k; ++j) {
      add_row(i, m + 1 + j, true, false);
      add_row(i, m + 1 + j, false, true);
    }
  }
  return ConditionSet(std::move(cols), std::move(rows));
}

}  // namespace

std::string render(const JetVar& v, bool with_index) {
  std::string out(1, v.side == Side::kA ? 'a' : 'b');
  if (with_index) out += std::to_string(v.index);
  if (v.deriv <= 2) {
    out.append(static_cast<size_t>(v.deriv), '\'');
  } else {
    out += "^(" + std::to_string(v.deriv) + ")";
  }
  return out + "(0)";
}

bool column_before(const JetVar& lhs, const JetVar& rhs) {
  if (lhs.index != rhs.index) return lhs.index > rhs.index;
  if (lhs.deriv != rhs.deriv) return lhs.deriv > rhs.deriv;
  return lhs.side == Side::kB && rhs.side == Side::kA;
}

std::vector<JetVar> operator_unknowns(int m, int k) {
  std::vector<JetVar> out;
  for (int s = k; s >= 0; --s) {
    for (int r = m; r >= 0; --r) {
      out.push_back({Side::kB, s, r});
      out.push_back({Side::kA, s, r});
    }
  }
  return out;
}

std::string Constraint::text(bool with_index) const {
  if (terms.size() == 2 && terms[0].second == -terms[1].second) {
    const JetVar* left = &terms[0].first;
    const JetVar* right = &terms[1].first;
    if (left->side == Side::kB && right->side == Side::kA) std::swap(left, right);
    return render(*left, with_index) + " = " + render(*right, with_index);
  }
  std::string out;
  for (size_t t = 0; t < terms.size(); ++t) {
    out += coefficient_prefix(terms[t].second, t == 0) + render(terms[t].first, with_index);
  }
  return out + " = 0";
}

std::pair<Rational, Rational> Constraint::sides(
    const std::function<Rational(const JetVar&)>& value) const {
  if (terms.size() == 2 && terms[0].second == -terms[1].second) {
    const JetVar* left = &terms[0].first;
    const JetVar* right = &terms[1].first;
    if (left->side == Side::kB && right->side == Side::kA) std::swap(left, right);
    return {value(*left), value(*right)};
  }
  Rational lhs(0);
  for (const auto& [v, c] : terms) lhs += c * value(v);
  return {lhs, Rational(0)};
}

ConditionSet::ConditionSet(std::vector<JetVar> columns, Matrix rows)
    : columns_(std::move(columns)), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != columns_.size()) throw PreconditionViolation("condition row has wrong width");
  }
  reduce_rows(rows_, columns_.size());
}

std::vector<Constraint> ConditionSet::constraints() const {
  std::vector<Constraint> out;
  for (const auto& row : rows_) {
    Constraint c;
    for (size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero()) c.terms.emplace_back(columns_[j], row[j]);
    }
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Constraint& a, const Constraint& b) {
    return reading_key(a.terms.front().first) < reading_key(b.terms.front().first);
  });
  return out;
}

std::vector<std::string> ConditionSet::lines(bool with_index) const {
  std::vector<std::string> out;
  for (const auto& c : constraints()) out.push_back(c.text(with_index));
  return out;
}

std::vector<std::vector<Rational>> ConditionSet::solution_basis() const {
  std::vector<size_t> pivots;
  for (const auto& row : rows_) pivots.push_back(pivot_of(row));
  std::vector<std::vector<Rational>> basis;
  for (size_t f = 0; f < columns_.size(); ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<Rational> v(columns_.size());
    v[f] = Rational(1);
    for (size_t i = 0; i < rows_.size(); ++i) v[pivots[i]] = -rows_[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

ConditionSet ConditionSet::project(const std::function<bool(const JetVar&)>& keep) const {
  std::vector<size_t> order;
  std::vector<JetVar> kept;
  for (size_t j = 0; j < columns_.size(); ++j) {
    if (!keep(columns_[j])) order.push_back(j);
  }
  size_t eliminated = order.size();
  for (size_t j = 0; j < columns_.size(); ++j) {
    if (keep(columns_[j])) {
      order.push_back(j);
      kept.push_back(columns_[j]);
    }
  }
  Matrix permuted;
  for (const auto& row : rows_) {
    std::vector<Rational> r;
    for (size_t j : order) r.push_back(row[j]);
    permuted.push_back(std::move(r));
  }
  reduce_rows(permuted, columns_.size());
  Matrix implied;
  for (const auto& row : permuted) {
    if (pivot_of(row) < eliminated) continue;
    implied.emplace_back(row.begin() + static_cast<long>(eliminated), row.end());
  }
  return ConditionSet(std::move(kept), std::move(implied));
}

ConditionSet generate_conditions(SpaceSpec space, int k) {
  if (k < 0) throw PreconditionViolation("operator order must be nonnegative");
  static std::mutex mu;
  static std::map<std::pair<int, int>, ConditionSet> memo;
  std::pair<int, int> key{space.contact_order(), k};
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  ConditionSet built = build_operator_conditions(space.contact_order(), k);
  std::lock_guard lock(mu);
  return memo.emplace(key, std::move(built)).first->second;
}

ConditionSet symbol_conditions(SpaceSpec space, int degree) {
  return generate_conditions(space, degree).project(
      [degree](const JetVar& v) { return v.index == degree; });
}

std::vector<GluedFunction> spanning_family(SpaceSpec space, int max_degree) {
  std::vector<GluedFunction> out;
  const int m = space.contact_order();
  for (int n = 0; n <= max_degree; ++n) {
    Poly mono = Poly::monomial(Rational(1), n);
    out.push_back(make_glued(mono, mono, space));
    if (n > m) {
      out.push_back(make_glued(mono, Poly(), space));
      out.push_back(make_glued(Poly(), mono, space));
    }
  }
  return out;
}

AdmissibilityReport evaluate(const ConditionSet& conditions,
                             const std::function<Poly(Side, int)>& coefficient,
                             bool with_index) {
  auto value = [&](const JetVar& v) {
    return coefficient(v.side, v.index).derivative_at_zero(v.deriv);
  };
  AdmissibilityReport report;
  for (const auto& c : conditions.constraints()) {
    Rational total(0);
    for (const auto& [v, w] : c.terms) total += w * value(v);
    if (total.is_zero()) continue;
    auto [lhs, rhs] = c.sides(value);
    report.violations.push_back({c.text(with_index), lhs, rhs});
  }
  return report;
}

AdmissibilityReport check_admissible(const BranchOp& d1, const BranchOp& d2, SpaceSpec space,
                                     int k) {
  if (d1.order() > k || d2.order() > k) {
    throw PreconditionViolation("branch operator order exceeds the declared order " +
                                std::to_string(k));
  }
  return evaluate(generate_conditions(space, k),
                  [&](Side side, int s) { return side == Side::kA ? d1.coeff(s) : d2.coeff(s); });
}

int default_probe_depth(SpaceSpec space, int k) { return k + space.contact_order() + 2; }

bool probe_admissible(const BranchOp& d1, const BranchOp& d2, SpaceSpec space, int probe_degree) {
  const int m = space.contact_order();
  for (const auto& u : spanning_family(space, probe_degree)) {
    if (jet_project(apply(d1, u.f()), m) != jet_project(apply(d2, u.g()), m)) return false;
  }
  return true;
}

namespace {

class ConditionLexer {
 public:
  ConditionLexer(std::string_view line, int line_no) : s_(line), line_no_(line_no) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
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
  void expect(std::string_view lit) {
    skip_ws();
    if (s_.substr(pos_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }
  std::string digits() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  char raw() { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("line " + std::to_string(line_no_) + ", column " +
                                std::to_string(pos_ + 1) + ": " + what);
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
  int line_no_;
};

}  // namespace

ConditionSet parse_conditions(std::string_view text, std::vector<JetVar> columns,
                              std::optional<int> default_index) {
  Matrix rows;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    ConditionLexer lex(line, line_no);
    if (lex.at_end()) continue;

    auto parse_var = [&]() -> size_t {
      char side = lex.peek();
      lex.advance();
      std::string idx = lex.digits();
      int index = 0;
      if (idx.empty()) {
        if (!default_index) lex.fail("variable needs an index");
        index = *default_index;
      } else {
        index = std::stoi(idx);
      }
      int deriv = 0;
      while (lex.raw() == '\'') {
        ++deriv;
        lex.advance();
      }
      if (lex.raw() == '^') {
        if (deriv != 0) lex.fail("mixed derivative notation");
        lex.advance();
        lex.expect("(");
        std::string d = lex.digits();
        if (d.empty()) lex.fail("expected derivative order");
        deriv = std::stoi(d);
        lex.expect(")");
      }
      lex.expect("(0)");
      JetVar v{side == 'a' ? Side::kA : Side::kB, index, deriv};
      auto it = std::find(columns.begin(), columns.end(), v);
      if (it == columns.end()) lex.fail("unknown " + render(v) + " is not part of this system");
      return static_cast<size_t>(it - columns.begin());
    };

    // Parses one side into `acc`, scaled by `sign`.
    auto parse_expr = [&](std::vector<Rational>& acc, const Rational& sign) {
      bool first = true;
      while (true) {
        Rational s = sign;
        if (lex.accept('-')) {
          s = -s;
        } else if (!lex.accept('+') && !first) {
          break;
        }
        first = false;
        Rational coeff(1);
        bool has_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
          std::string num = lex.digits();
          if (lex.raw() == '/') {
            lex.advance();
            std::string den = lex.digits();
            if (den.empty()) lex.fail("expected denominator");
            num += "/" + den;
          }
          coeff = Rational::parse(num);
          has_coeff = true;
          lex.accept('*');
        }
        char c = lex.peek();
        if (c == 'a' || c == 'b') {
          acc[parse_var()] += s * coeff;
        } else if (!has_coeff) {
          lex.fail("expected a term");
        } else if (!coeff.is_zero()) {
          lex.fail("nonzero constant in a homogeneous condition");
        }
        if (lex.peek() != '+' && lex.peek() != '-') break;
      }
    };

    std::vector<Rational> prev(columns.size());
    parse_expr(prev, Rational(1));
    int eqs = 0;
    while (lex.accept('=')) {
      std::vector<Rational> next(columns.size());
      parse_expr(next, Rational(1));
      std::vector<Rational> row(columns.size());
      for (size_t j = 0; j < row.size(); ++j) row[j] = prev[j] - next[j];
      rows.push_back(std::move(row));
      prev = std::move(next);
      ++eqs;
    }
    if (!lex.at_end()) lex.fail("unexpected trailing text");
    if (eqs == 0) lex.fail("expected '='");
  }
  return ConditionSet(std::move(columns), std::move(rows));
}

}  // namespace kmalg

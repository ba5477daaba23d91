#include "kmalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "kmalg/conditions.hpp"
#include "kmalg/dsl.hpp"
#include "kmalg/paired.hpp"
#include "kmalg/spectra.hpp"
#include "kmalg/symbols.hpp"

namespace kmalg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string verb;
  std::optional<std::string> space;
  std::optional<int> order;
  std::optional<int> degree;
  std::optional<int> probe_depth;
  std::optional<std::string> profile;
  bool json = false;
  int max_degree = Limits{}.max_degree;
  std::vector<std::string> files;
};

/// Input error raised by the front end itself.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Collected outcome of one verb.
struct Outcome {
  std::string verdict;
  int status = kOk;
  std::vector<Violation> violations;
  std::vector<std::string> text;  // human-readable lines
  Json result = Json::object();
};

Json coeffs(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

Json op_json(const BranchOp& op) {
  Json arr = Json::array();
  for (int i = 0; i <= op.order(); ++i) arr.push_back(coeffs(op.coeff(i)));
  return arr;
}

Json value_json(const dsl::Value& v) {
  Json j;
  j["kind"] = dsl::kind_name(v);
  if (const auto* p = std::get_if<Poly>(&v)) {
    j["coeffs"] = coeffs(*p);
  } else if (const auto* p2 = std::get_if<Poly2>(&v)) {
    Json rows = Json::array();
    for (int r = 0; r <= p2->y_degree(); ++r) rows.push_back(coeffs(p2->y_coeff(r)));
    j["y_rows"] = rows;
  } else if (const auto* u = std::get_if<GluedFunction>(&v)) {
    j["m"] = u->space().contact_order();
    j["f"] = coeffs(u->f());
    j["g"] = coeffs(u->g());
  } else if (const auto* b = std::get_if<dsl::PairedBlock>(&v)) {
    j["order"] = b->declared_order();
    j["x"] = op_json(b->x.op);
    j["y"] = op_json(b->y.op);
  } else if (const auto* o = std::get_if<dsl::OpBlock>(&v)) {
    j["order"] = o->declared_order;
    j["coeffs"] = op_json(o->op);
  } else if (const auto* s = std::get_if<dsl::SymbolText>(&v)) {
    j["degree"] = s->degree;
    j["m"] = s->space.contact_order();
    j["a"] = coeffs(s->a);
    j["b"] = coeffs(s->b);
  } else if (const auto* c = std::get_if<Character>(&v)) {
    j["at"] = c->base_point().str();
  }
  j["text"] = dsl::to_dsl(v);
  return j;
}

dsl::SymbolText symbol_text(const SymbolElem& s) {
  return {s.degree(), s.a(), s.b(), s.space()};
}

dsl::PairedBlock paired_block(const PairedOp& op) {
  return {{op.d1(), op.order()}, {op.d2(), op.order()}};
}

void set_value(Outcome& out, const dsl::Value& v) {
  out.result = value_json(v);
  std::istringstream lines(dsl::to_dsl(v));
  for (std::string line; std::getline(lines, line);) out.text.push_back(line);
}

void add_report(Outcome& out, const AdmissibilityReport& report) {
  for (const auto& v : report.violations) out.violations.push_back(v);
}

SpaceSpec parse_space(const std::string& text) {
  static const std::regex kPattern("K([0-9]{1,3})");
  std::smatch m;
  if (!std::regex_match(text, m, kPattern)) {
    throw UsageError("--space expects K<m> with m >= 0, got '" + text + "'");
  }
  return SpaceSpec(std::stoi(m[1]));
}

class Runner {
 public:
  Runner(Options opts, std::istream& in) : opts_(std::move(opts)), in_(in) {
    limits_.max_degree = opts_.max_degree;
    if (opts_.space) space_ = parse_space(*opts_.space);
  }

  Outcome run() {
    const std::string& v = opts_.verb;
    if (v == "conditions") return conditions();
    if (v == "check") return check();
    if (v == "compose") return combine(false);
    if (v == "commutator") return combine(true);
    if (v == "symbol") return symbol();
    if (v == "bracket") return bracket();
    if (v == "extend") return extend();
    if (v == "restrict") return restrict();
    if (v == "witness") return witness();
    if (v == "nullity") return nullity();
    throw UsageError("unknown verb '" + v + "'");
  }

  [[nodiscard]] std::string space_name() const { return space_ ? space_->name() : ""; }

 private:
  SpaceSpec require_space() const {
    if (!space_) throw UsageError(opts_.verb + " needs --space K<m>");
    return *space_;
  }

  // Adopts the space carried by an input value, rejecting a conflicting flag.
  SpaceSpec adopt_space(SpaceSpec from_input) {
    if (space_ && *space_ != from_input) {
      throw UsageError("input lives on " + from_input.name() + " but --space is " +
                       space_->name());
    }
    space_ = from_input;
    return from_input;
  }

  const std::vector<dsl::Value>& inputs() {
    if (!cached_) cached_ = read_inputs();
    return *cached_;
  }

  std::vector<dsl::Value> read_inputs() {
    std::vector<dsl::Value> out;
    auto take = [&](const std::string& source, const std::string& text) {
      try {
        for (auto& v : dsl::parse_document(text, limits_)) out.push_back(std::move(v));
      } catch (const dsl::DslError& e) {
        throw UsageError(source + ": " + e.what());
      }
    };
    if (opts_.files.empty()) {
      std::ostringstream ss;
      ss << in_.rdbuf();
      take("<stdin>", ss.str());
    }
    for (const auto& path : opts_.files) {
      std::ifstream f(path);
      if (!f) throw UsageError("cannot read '" + path + "'");
      std::ostringstream ss;
      ss << f.rdbuf();
      take(path, ss.str());
    }
    return out;
  }

  template <typename T>
  std::vector<T> inputs_of(size_t count, const std::string& what) {
    const auto& values = inputs();
    if (values.size() != count) {
      throw UsageError(opts_.verb + " expects " + std::to_string(count) + " " + what + ", got " +
                       std::to_string(values.size()) + " value(s)");
    }
    std::vector<T> out;
    for (const auto& v : values) {
      const auto* t = std::get_if<T>(&v);
      if (t == nullptr) {
        throw UsageError(opts_.verb + " expects " + what + ", got a " + dsl::kind_name(v));
      }
      out.push_back(*t);
    }
    return out;
  }

  // Paired operators, either as `branch x`/`branch y` blocks or as consecutive
  // plain op blocks (first block acts on branch 1).
  std::vector<dsl::PairedBlock> paired_inputs(size_t count) {
    const auto& values = inputs();
    std::vector<dsl::PairedBlock> out;
    for (size_t i = 0; i < values.size(); ++i) {
      if (const auto* p = std::get_if<dsl::PairedBlock>(&values[i])) {
        out.push_back(*p);
      } else if (const auto* x = std::get_if<dsl::OpBlock>(&values[i]);
                 x != nullptr && i + 1 < values.size() &&
                 std::holds_alternative<dsl::OpBlock>(values[i + 1])) {
        out.push_back({*x, std::get<dsl::OpBlock>(values[i + 1])});
        ++i;
      } else {
        throw UsageError(opts_.verb + " expects paired operators, got a " +
                         dsl::kind_name(values[i]));
      }
    }
    if (out.size() != count) {
      throw UsageError(opts_.verb + " expects " + std::to_string(count) +
                       " paired operator(s), got " + std::to_string(out.size()));
    }
    return out;
  }

  int order_for(const dsl::PairedBlock& b) const { return opts_.order.value_or(b.declared_order()); }

  // Builds an admissible pair or records why it is not.
  std::optional<PairedOp> admit(const dsl::PairedBlock& b, Outcome& out) {
    try {
      return make_paired(b.x.op, b.y.op, require_space(), order_for(b));
    } catch (const NotAdmissible& e) {
      add_report(out, e.report());
      out.verdict = "not admissible";
      out.status = kFailed;
      out.text.push_back("input is not admissible at order " + std::to_string(order_for(b)));
      return std::nullopt;
    }
  }

  std::optional<SymbolElem> admit(const dsl::SymbolText& s, Outcome& out) {
    adopt_space(s.space);
    try {
      return make_symbol(s.degree, s.a, s.b, s.space);
    } catch (const InvalidSymbol& e) {
      add_report(out, e.report());
      out.verdict = "invalid";
      out.status = kFailed;
      out.text.push_back("input is not a valid symbol of degree " + std::to_string(s.degree));
      return std::nullopt;
    }
  }

  Outcome conditions() {
    SpaceSpec space = require_space();
    if (opts_.order.has_value() == opts_.degree.has_value()) {
      throw UsageError("conditions needs exactly one of --order (operators) or --degree (symbols)");
    }
    Outcome out;
    out.verdict = "ok";
    const bool symbols = opts_.degree.has_value();
    const int k = symbols ? *opts_.degree : *opts_.order;
    if (k < 0) throw UsageError("order and degree must be nonnegative");
    ConditionSet set = symbols ? symbol_conditions(space, k) : generate_conditions(space, k);
    out.text = set.lines(!symbols);
    out.result = {{"kind", symbols ? "symbol_conditions" : "conditions"},
                  {symbols ? "degree" : "order", k},
                  {"lines", out.text}};
    return out;
  }

  Outcome check() {
    SpaceSpec space = require_space();
    auto block = paired_inputs(1).front();
    const int k = order_for(block);
    AdmissibilityReport report = check_admissible(block.x.op, block.y.op, space, k);
    const int depth = opts_.probe_depth.value_or(default_probe_depth(space, k));
    if (depth < 1) throw UsageError("--probe-depth must be positive");
    const bool probe = probe_admissible(block.x.op, block.y.op, space, depth);
    if (probe != report.admissible()) {
      throw ClosureViolation("generated conditions and probe disagree on this input");
    }
    Outcome out;
    add_report(out, report);
    out.verdict = report.admissible() ? "admissible" : "not admissible";
    out.status = report.admissible() ? kOk : kFailed;
    out.text.push_back(out.verdict + " at order " + std::to_string(k) + " on " + space.name());
    out.text.push_back("probe (depth " + std::to_string(depth) +
                       "): " + (probe ? "admissible" : "not admissible"));
    out.result = {{"kind", "check"},
                  {"order", k},
                  {"probe_depth", depth},
                  {"probe_admissible", probe}};
    return out;
  }

  Outcome combine(bool bracket) {
    auto blocks = paired_inputs(2);
    Outcome out;
    auto a = admit(blocks[0], out);
    auto b = admit(blocks[1], out);
    if (!a || !b) return out;
    PairedOp r = bracket ? pair_commutator(*a, *b, limits_) : pair_compose(*a, *b, limits_);
    out.verdict = "admissible";
    set_value(out, paired_block(r));
    return out;
  }

  Outcome symbol() {
    const auto& values = inputs();
    if (values.size() == 1 && std::holds_alternative<dsl::SymbolText>(values[0])) {
      Outcome out;
      auto s = admit(std::get<dsl::SymbolText>(values[0]), out);
      if (!s) return out;
      out.verdict = "valid";
      set_value(out, symbol_text(*s));
      return out;
    }
    auto block = paired_inputs(1).front();
    Outcome out;
    auto op = admit(block, out);
    if (!op) return out;
    out.verdict = "valid";
    set_value(out, symbol_text(pair_symbol(*op)));
    return out;
  }

  Outcome bracket() {
    const auto& values = inputs();
    Outcome out;
    if (values.size() == 2 && std::holds_alternative<dsl::SymbolText>(values[0])) {
      auto texts = inputs_of<dsl::SymbolText>(2, "symbols");
      auto s = admit(texts[0], out);
      auto t = admit(texts[1], out);
      if (!s || !t) return out;
      out.verdict = "valid";
      set_value(out, symbol_text(poisson_bracket(*s, *t, limits_)));
      return out;
    }
    auto blocks = paired_inputs(2);
    auto a = admit(blocks[0], out);
    auto b = admit(blocks[1], out);
    if (!a || !b) return out;
    SymbolElem via_commutator = bracket_via_commutator(*a, *b, limits_);
    SymbolElem via_formula = poisson_bracket(pair_symbol(*a), pair_symbol(*b), limits_);
    if (via_commutator != via_formula) {
      throw ClosureViolation("commutator symbol " + via_commutator.str() +
                             " differs from the bracket formula " + via_formula.str());
    }
    out.verdict = "valid";
    set_value(out, symbol_text(via_commutator));
    return out;
  }

  Poly profile(SpaceSpec space) const {
    if (!opts_.profile) return default_profile(space);
    Poly h = dsl::parse_poly(*opts_.profile);
    check_profile(h, space);
    return h;
  }

  Outcome extend() {
    auto u = inputs_of<GluedFunction>(1, "a glued pair").front();
    SpaceSpec space = adopt_space(u.space());
    Outcome out;
    out.verdict = "ok";
    set_value(out, extend_to_plane(u, profile(space)));
    return out;
  }

  Outcome restrict() {
    SpaceSpec space = require_space();
    const auto& values = inputs();
    if (values.size() != 1) throw UsageError("restrict expects one plane polynomial");
    Poly2 plane;
    if (const auto* p = std::get_if<Poly>(&values[0])) {
      plane = Poly2::from_x(*p);
    } else if (const auto* p2 = std::get_if<Poly2>(&values[0])) {
      plane = *p2;
    } else {
      throw UsageError("restrict expects a polynomial, got a " + dsl::kind_name(values[0]));
    }
    Outcome out;
    out.verdict = "ok";
    set_value(out, restrict_to_branches(plane, profile(space), space, limits_));
    return out;
  }

  Outcome witness() {
    SpaceSpec space = require_space();
    auto chars = inputs_of<Character>(2, "characters");
    const int bound = opts_.degree.value_or(space.contact_order() + 2);
    if (bound < 1) throw UsageError("--degree must be positive");
    Outcome out;
    auto w = separating_witness(chars[0], chars[1], space, bound);
    if (!w) {
      out.verdict = "none";
      out.status = kFailed;
      out.text.push_back("no witness up to degree " + std::to_string(bound) +
                         ": the characters denote the same point");
      out.result = {{"kind", "none"}};
      return out;
    }
    out.verdict = "witness";
    set_value(out, *w);
    out.text.push_back("values " + char_eval(chars[0], *w).str() + " and " +
                       char_eval(chars[1], *w).str());
    return out;
  }

  Outcome nullity() {
    SpaceSpec space = require_space();
    NullityReport report = nullity_identity_check(space);
    Outcome out;
    out.verdict = report.all_passed() ? "pass" : "fail";
    out.status = report.all_passed() ? kOk : kFailed;
    Json ids = Json::array();
    for (const auto& c : report.identities) {
      out.text.push_back(std::string(c.passed ? "PASS " : "FAIL ") + c.name);
      ids.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    for (const auto& n : report.notes) out.text.push_back("note: " + n);
    out.result = {{"kind", "nullity"}, {"identities", ids}, {"notes", report.notes}};
    return out;
  }

  Options opts_;
  std::istream& in_;
  Limits limits_;
  std::optional<SpaceSpec> space_;
  std::optional<std::vector<dsl::Value>> cached_;
};

void emit(const Options& opts, const std::string& space, const Outcome& o, std::ostream& out) {
  if (opts.json) {
    Json j;
    j["verb"] = opts.verb;
    j["space"] = space;
    j["verdict"] = o.verdict;
    Json vs = Json::array();
    for (const auto& v : o.violations) {
      vs.push_back({{"constraint", v.constraint}, {"lhs", v.lhs.str()}, {"rhs", v.rhs.str()}});
    }
    j["violations"] = vs;
    j["result"] = o.result;
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& line : o.text) out << line << '\n';
  for (const auto& v : o.violations) {
    out << "violation: " << v.constraint << "  [lhs " << v.lhs << ", rhs " << v.rhs << "]\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact computations with differential operators on glued curves", "kmalg"};
  app.require_subcommand(1, 1);
  Options opts;

  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"check", "admissibility of a paired operator"},
      {"compose", "composition of two admissible pairs"},
      {"commutator", "commutator of two admissible pairs"},
      {"symbol", "symbol of a pair, or validation of a symbol"},
      {"bracket", "Poisson bracket of two symbols or two pairs"},
      {"conditions", "jet conditions on operator or symbol coefficients"},
      {"extend", "extend a glued pair to the plane"},
      {"restrict", "restrict a plane polynomial to the branches"},
      {"witness", "separating element for two characters"},
      {"nullity", "identities behind the vanishing of symbol characters"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--space", opts.space, "space K<m>");
    sub->add_option("--order", opts.order, "operator order k");
    sub->add_option("--degree", opts.degree, "symbol degree, or witness search bound");
    sub->add_option("--probe-depth", opts.probe_depth, "probe oracle depth D");
    sub->add_option("--max-degree", opts.max_degree, "degree cap")->check(CLI::PositiveNumber);
    sub->add_option("--profile", opts.profile, "profile polynomial h for extend/restrict");
    sub->add_flag("--json", opts.json, "machine-readable output");
    sub->add_option("files", opts.files, "DSL input files (default: stdin)");
    sub->callback([&opts, n = name] { opts.verb = n; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Runner runner(opts, in);
    Outcome outcome = runner.run();
    emit(opts, runner.space_name(), outcome, out);
    return outcome.status;
  } catch (const ClosureViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace kmalg::cli

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kmalg/glued.hpp"

namespace kmalg::testing {

/// Transcribed condition listing with `@space`, `@order` or `@degree` headers.
struct Table {
  std::filesystem::path path;
  SpaceSpec space{0};
  std::optional<int> order;
  std::optional<int> degree;
  std::string body;
};

std::vector<Table> load_tables(const std::filesystem::path& dir);

/// True when the listing reduces to the generated condition set.
bool table_matches(const Table& t);

/// Normal-form family sweep on K1 over small c, d, e, f with random N.
struct FamilyOutcome {
  int cases = 0;
  int admissible = 0;
  bool admissible_iff_cd_zero = true;
};
FamilyOutcome normal_form_sweep(unsigned seed);

/// Scripted CLI invocation:
///   args: <argv...>
///   --- stdin
///   --- stdout
///   --- exit <code>
struct CliCase {
  std::string name;
  std::vector<std::string> args;
  std::string stdin_text;
  std::string stdout_text;
  int exit_code = 0;
};

std::vector<CliCase> load_cli_cases(const std::filesystem::path& dir);

struct CliResult {
  int code;
  std::string out;
  std::string err;
};
CliResult run_case(const CliCase& c);

std::string read_file(const std::filesystem::path& p);

}  // namespace kmalg::testing

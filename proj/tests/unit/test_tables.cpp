#include <doctest.h>

#include "golden.hpp"

using namespace kmalg::testing;

namespace {
const std::filesystem::path kTables = KMALG_GOLDEN_DIR "/tables";
}

TEST_CASE("transcribed listings reduce to the generated conditions") {
  auto tables = load_tables(kTables);
  REQUIRE(tables.size() >= 19);
  for (const auto& t : tables) {
    CAPTURE(t.path.filename().string());
    CHECK(table_matches(t));
  }
}

TEST_CASE("quarantined listings are still known to differ") {
  auto tables = load_tables(kTables / "quarantine");
  REQUIRE(tables.size() == 2);
  for (const auto& t : tables) {
    CAPTURE(t.path.filename().string());
    CHECK_FALSE(table_matches(t));
  }
}

TEST_CASE("quarantined normal form is admissible only without c and d") {
  REQUIRE(std::filesystem::exists(kTables / "quarantine" / "k1_normal_form.family"));
  FamilyOutcome r = normal_form_sweep(7);
  CHECK(r.cases == 256);
  CHECK(r.admissible == 16);
  CHECK(r.admissible_iff_cd_zero);
}

TEST_CASE("scripted CLI corpus") {
  auto cases = load_cli_cases(KMALG_GOLDEN_DIR "/cli");
  CHECK(cases.size() == 20);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    CliResult r = run_case(c);
    CHECK(r.code == c.exit_code);
    CHECK(r.out == c.stdout_text);
  }
}

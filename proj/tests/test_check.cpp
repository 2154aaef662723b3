#include "doctest.h"
#include "fzmod/check.hpp"

using namespace fzmod;

TEST_SUITE("check") {
  TEST_CASE("all suites pass at reduced size") {
    CheckParams p;
    p.models = 12;
    p.formulas = 60;
    p.functions_per_depth = 6;
    for (const auto& suite : check_suite_names()) {
      auto rows = run_check_suite(suite, p);
      CHECK(!rows.empty());
      for (const auto& row : rows) {
        INFO(format_check_row(row));
        CHECK(row.pass);
      }
    }
  }

  TEST_CASE("rows are deterministic for a fixed seed") {
    CheckParams p;
    p.models = 6;
    p.formulas = 20;
    p.functions_per_depth = 3;
    p.seed = 1234;
    auto first = run_check_suite("coincidence", p);
    auto second = run_check_suite("coincidence", p);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(format_check_row(first[i]) == format_check_row(second[i]));
    }
  }

  TEST_CASE("row format") {
    CheckRow row{"example", "d2-s1-s4", true, "got 1/5, want 1/5"};
    CHECK(format_check_row(row) == "CHECK example d2-s1-s4 PASS got 1/5, want 1/5");
  }
}

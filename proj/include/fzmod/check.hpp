#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fzmod/model.hpp"
#include "fzmod/truth.hpp"

namespace fzmod {

// Knobs for the theorem-derived property suites. Defaults match the
// documented acceptance configuration.
struct CheckParams {
  std::uint64_t seed = 42;
  int models = 200;              // coincidence suite sample size
  int max_states = 5;
  int max_atoms = 2;
  std::int64_t den = 12;         // value grid 1/den
  Truth edge_density = Truth::from_fraction(1, 2);
  int max_depth = 3;
  int formulas = 500;            // modal-invariance fuzz corpus
  int functions_per_depth = 50;  // density suite sample size
  Truth delta = Truth::from_fraction(1, 100);      // witness slack
  Truth approx_eps = Truth::from_fraction(1, 20);  // density suite bound
};

struct CheckRow {
  std::string suite;
  std::string case_id;
  bool pass = false;
  std::string detail;
};

// Suites, in acceptance-criteria order:
//   example coincidence pseudometric modalinv density locality translation
//   ef zerodist noninvariance
const std::vector<std::string>& check_suite_names();

std::vector<CheckRow> run_check_suite(const std::string& suite, const CheckParams& params);
std::vector<CheckRow> run_all_check_suites(const CheckParams& params);

// "CHECK <suite> <case-id> PASS|FAIL <detail>"
std::string format_check_row(const CheckRow& row);

// The six-state two-fork example model used throughout the documentation
// and tests.
extern const char* const kForkModelText;
Model fork_model();

// A single self-loop of weight 1 joined with a chain of `chain_edges`
// weight-1 edges; returns the union model plus the loop state and chain head.
struct LoopChain {
  Model model;
  StateId loop_state = 0;
  StateId chain_head = 0;
};
LoopChain loop_chain_model(int chain_edges);

}  // namespace fzmod

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypolog/compiled.hpp"
#include "hypolog/program.hpp"

namespace hypolog {

/// Bounds and distributions for random programs.
struct GenSpec {
  size_t max_rules = 8;
  size_t max_body = 3;
  size_t max_nesting = 3;
  size_t max_arity = 2;
  size_t constants = 3;
  size_t proximity = 4;
  size_t predicates = 4;
  /// Rule grades and proximity degrees are drawn from this list.
  std::vector<double> grades{1.0, 0.875, 0.75, 0.625, 0.5};
  /// Chance that a rule gets a grade other than 1 (fuzzy mode only).
  double graded_fraction = 0.3;
  bool fuzzy = false;
  uint64_t seed = 0;
};

/// A generated program plus goal and solve settings.
struct TestCase {
  Program program;
  Query query;
  double lambda = 0.0;
  TNorm tnorm;
  bool transitive = false;
  uint64_t seed = 0;
};

Program gen_program(const GenSpec& spec);
TestCase gen_case(const GenSpec& spec);

/// Greatest implication nesting depth in `program`.
size_t implication_depth(const Program& program);

struct Comparison {
  enum class Outcome { Pass, Counterexample, Inconclusive };
  Outcome outcome = Outcome::Pass;
  std::string left_engine;
  std::string right_engine;
  std::vector<Answer> left;
  std::vector<Answer> right;
  /// Failing program after shrinking, as a loadable file with the goal in a comment.
  std::string report;
};

struct CheckOptions {
  uint32_t depth_budget = 200;
  uint64_t step_limit = 200000;
  /// Settings of the compiled engine under test.
  CompiledConfig compiled;
  /// Also compare against plain SLD when the program allows it.
  bool plain_oracle = true;
};

/// Compares both meta strategies and the compiled engine on one case. A run
/// that exhausts its step limit makes the comparison inconclusive.
Comparison check_equivalence(const TestCase& test, const CheckOptions& options = {});

/// Rule-deletion shrinking: drops clauses while the case still fails.
TestCase shrink(TestCase test, const CheckOptions& options);

/// Fuzzy and crisp translations on the same case. Passes when the answers
/// agree and every degree is exactly 1.
Comparison check_crisp_degeneration(const TestCase& test, const CheckOptions& options = {});

/// Passes when answers at `lambda + delta` form a sub-multiset of answers at `lambda`.
Comparison check_lambda_monotone(const TestCase& test, double delta, const CheckOptions& options = {});

/// Reads HYPOLOG_SEED, falling back to `fallback`.
uint64_t seed_from_env(uint64_t fallback);

/// Loadable text for a case: directives, rules and the goal as a comment.
std::string case_text(const TestCase& test);

}  // namespace hypolog

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypolog/program.hpp"
#include "hypolog/solver.hpp"

namespace hypolog {

struct BenchProgram {
  std::string name;
  int size = 0;
  Program program;
  Query query;
};

/// Builds hypo1, hypo2 or hypo3 at size `n`. Throws std::invalid_argument
/// for an unknown name or n < 1.
BenchProgram gen_bench(std::string_view name, int n);

/// Raised when engines disagree on a benchmark; the message holds the diff.
class EngineDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchRow {
  std::string program;
  std::string engine;
  int size = 0;
  double cputime_ms = 0.0;
  size_t answers = 0;
  uint64_t inferences = 0;
  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  std::string to_text() const;
  std::string to_csv() const;
  /// Parses the output of to_csv; throws std::invalid_argument on bad input.
  static BenchReport from_csv(std::string_view text);
};

inline constexpr const char* kBenchCsvHeader = "program,engine,size,cputime_ms,answers,inferences";

/// Times every (program, engine, size) cell, median of `trials` runs.
/// Answer multisets are compared across engines before any timing.
BenchReport run_bench(const std::vector<std::string>& names, const std::vector<EngineKind>& engines,
                      const std::vector<int>& sizes, int trials = 3);

}  // namespace hypolog

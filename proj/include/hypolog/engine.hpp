#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypolog/answer.hpp"
#include "hypolog/tnorm.hpp"

namespace hypolog {

/// Raised when a run exceeds its step limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  double lambda = 0.0;
  TNorm tnorm;
  bool occurs_check = false;
  /// Maximum number of resolution steps on one branch; deeper branches fail.
  std::optional<uint32_t> depth_budget;
  /// Maximum number of machine steps for the whole run.
  std::optional<uint64_t> step_limit;
};

struct EngineStats {
  uint64_t resolutions = 0;
  uint64_t registrations = 0;
  uint64_t steps = 0;
  /// Set when some branch was cut by the depth budget.
  bool budget_hit = false;

  uint64_t inferences() const { return resolutions + registrations; }
};

struct TraceEvent {
  std::string label;  // "start", "rule 1", "rule 2", "builtin"
  int depth = 0;      // nesting level of hypothetical derivations
  std::string state;
};

using TraceSink = std::function<void(const TraceEvent&)>;

/// Pull-driven answer enumeration.
class AnswerStream {
 public:
  virtual ~AnswerStream() = default;
  virtual std::optional<Answer> next() = 0;
  virtual const EngineStats& stats() const = 0;
};

/// Drains up to `limit` answers.
std::vector<Answer> collect(AnswerStream& stream, std::optional<size_t> limit = std::nullopt);

}  // namespace hypolog

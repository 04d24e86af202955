#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "hypolog/compiled.hpp"
#include "hypolog/meta.hpp"

namespace hypolog {

enum class EngineKind { MetaList, MetaTree, Compiled };

/// Accepts "meta-a", "meta-b" or "compiled".
EngineKind parse_engine(std::string_view name);
std::string engine_name(EngineKind kind);

/// Session-level settings; directives in a program override them.
struct SolverSettings {
  double lambda = 0.0;
  TNorm tnorm;
  bool transitive = false;
  bool occurs_check = false;
  std::optional<uint32_t> depth_budget;
  std::optional<uint64_t> step_limit;
};

/// Settings after applying the program's own directives.
SolverSettings effective_settings(const Program& program, SolverSettings base);

/// One loaded program prepared for a chosen engine.
class Solver {
 public:
  Solver(const Program& program, EngineKind kind, SolverSettings settings);

  std::unique_ptr<AnswerStream> solve(const Query& query, TraceSink trace = {}) const;
  EngineKind kind() const { return kind_; }
  const SolverSettings& settings() const { return settings_; }
  const ProximityRelation& relation() const { return relation_; }

 private:
  EngineKind kind_;
  SolverSettings settings_;
  ProximityRelation relation_;
  std::unique_ptr<MetaEngine> meta_;
  std::unique_ptr<CompiledEngine> compiled_;
};

}  // namespace hypolog

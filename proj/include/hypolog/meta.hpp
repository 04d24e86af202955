#pragma once

#include <memory>

#include "hypolog/engine.hpp"
#include "hypolog/program.hpp"
#include "hypolog/proximity.hpp"

namespace hypolog {

/// How assumed hypotheses are stored alongside the program.
enum class Strategy {
  /// One ordered rule list holding program and hypotheses; assuming a rule
  /// copies the list up to the insertion point.
  List,
  /// Indexed static program plus a persistent balanced tree of hypotheses
  /// keyed by predicate and arity.
  Tree,
};

/// Reference interpreter for hypothetical (weak) SLD resolution over
/// goal/program/substitution/degree states.
class MetaEngine {
 public:
  MetaEngine(Program program, ProximityRelation relation, SolveOptions options, Strategy strategy);
  ~MetaEngine();

  /// Depth-first, left-to-right enumeration of the answers to `query`.
  /// The engine must outlive the stream.
  std::unique_ptr<AnswerStream> solve(const Query& query, TraceSink trace = {}) const;

  const Program& program() const { return program_; }
  const SolveOptions& options() const { return options_; }

  struct Index;

 private:
  Program program_;
  ProximityRelation relation_;
  SolveOptions options_;
  Strategy strategy_;
  std::unique_ptr<Index> index_;
};

}  // namespace hypolog

#pragma once

#include <memory>
#include <unordered_map>

#include "hypolog/context.hpp"
#include "hypolog/engine.hpp"
#include "hypolog/translate.hpp"

namespace hypolog {

/// True iff `beta` clears the cut.
bool over_lambda(double beta, double lambda);

/// Answer stream of the compiled engine; exposes the run's registrations.
class CompiledRun : public AnswerStream {
 public:
  virtual const RegistrationStore& registrations() const = 0;
};

struct CompiledConfig {
  /// Drop registrations on backtracking. Purely a memory optimization.
  bool trim_registrations = false;
  /// First-argument clause filtering (crisp dialect only).
  bool first_arg_index = true;
  /// Visibility test between a registered context and the current one.
  bool (*context_check)(const ContextId&, const ContextId&) = &prefix_check;
};

/// Solver over translated clauses. Contexts and registrations are native
/// run state rather than terms.
class CompiledEngine {
 public:
  using Config = CompiledConfig;

  CompiledEngine(TranslatedProgram program, ProximityRelation relation, SolveOptions options);
  CompiledEngine(TranslatedProgram program, ProximityRelation relation, SolveOptions options, Config config);
  CompiledEngine(CompiledEngine&&) = default;
  CompiledEngine(const CompiledEngine&) = delete;
  CompiledEngine& operator=(const CompiledEngine&) = delete;

  /// Translates `program` in the dialect suited to `relation`: crisp for the
  /// identity relation, fuzzy otherwise.
  static CompiledEngine from_program(const Program& program, ProximityRelation relation, SolveOptions options,
                                     Config config = {});

  std::unique_ptr<CompiledRun> solve(const Query& query) const;

  const TranslatedProgram& program() const { return program_; }

  using Key = uint64_t;

 private:
  TranslatedProgram program_;
  ProximityRelation relation_;
  SolveOptions options_;
  Config config_;
  std::unordered_map<Key, std::vector<const TranslatedClause*>> index_;
};

}  // namespace hypolog

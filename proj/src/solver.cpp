#include "hypolog/solver.hpp"

#include <stdexcept>

namespace hypolog {

EngineKind parse_engine(std::string_view name) {
  if (name == "meta-a") return EngineKind::MetaList;
  if (name == "meta-b") return EngineKind::MetaTree;
  if (name == "compiled") return EngineKind::Compiled;
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

std::string engine_name(EngineKind kind) {
  switch (kind) {
    case EngineKind::MetaList: return "meta-a";
    case EngineKind::MetaTree: return "meta-b";
    case EngineKind::Compiled: return "compiled";
  }
  return "?";
}

SolverSettings effective_settings(const Program& program, SolverSettings base) {
  if (program.lambda_cut) base.lambda = *program.lambda_cut;
  if (program.tnorm) base.tnorm = TNorm(*program.tnorm);
  if (program.transitive) base.transitive = *program.transitive;
  return base;
}

Solver::Solver(const Program& program, EngineKind kind, SolverSettings settings)
    : kind_(kind),
      settings_(settings),
      relation_(ProximityRelation::build(program.proximity, settings.tnorm, settings.transitive)) {
  if (settings.lambda < 0.0 || settings.lambda > 1.0) throw std::invalid_argument("lambda must lie in [0,1]");
  SolveOptions options;
  options.lambda = settings.lambda;
  options.tnorm = settings.tnorm;
  options.occurs_check = settings.occurs_check;
  options.depth_budget = settings.depth_budget;
  options.step_limit = settings.step_limit;
  if (kind == EngineKind::Compiled)
    compiled_ = std::make_unique<CompiledEngine>(CompiledEngine::from_program(program, relation_, options));
  else
    meta_ = std::make_unique<MetaEngine>(program, relation_, options,
                                         kind == EngineKind::MetaList ? Strategy::List : Strategy::Tree);
}

std::unique_ptr<AnswerStream> Solver::solve(const Query& query, TraceSink trace) const {
  if (compiled_) return compiled_->solve(query);
  return meta_->solve(query, std::move(trace));
}

}  // namespace hypolog

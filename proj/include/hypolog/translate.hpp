#pragma once

#include <string>
#include <vector>

#include "hypolog/program.hpp"
#include "hypolog/proximity.hpp"

namespace hypolog {

/// Crisp: registration-based clauses with heads kept as written.
/// Fuzzy: one expanded clause per proximity entry, linearized heads and
/// degree bookkeeping.
enum class Dialect { Crisp, Fuzzy };

struct UnifyPair {
  int head_var;   // linearized head argument
  Term source;    // the argument as written
  int degree_var;
};

/// One goal of a translated body.
struct TGoal {
  enum class Kind {
    Builtin,      // atom
    Call,         // atom plus list/index/context/degree variables at `context`
    Implication,  // rule_id, shared, inner (run at [index_var|context])
    OverLambda,   // value
    RegLookup,    // reg(rule_id, shared, context_var) followed by chk(context_var, context)
    UnifyArgs,    // pairs
    DegreeComp,   // inputs -> degree_var
    Disj,         // inner ; alternative
  };

  Kind kind = Kind::Builtin;
  Atom atom;
  Term context;  // current-context expression
  int list_var = -1;
  int index_var = -1;
  int context_var = -1;
  int degree_var = -1;
  int rule_id = -1;
  double value = 1.0;
  std::vector<Term> shared;
  std::vector<TGoal> inner;
  std::vector<TGoal> alternative;
  std::vector<UnifyPair> pairs;
  std::vector<Term> inputs;  // numbers or degree variables
};

using TSequence = std::vector<TGoal>;

struct TranslatedClause {
  Symbol predicate;
  std::vector<Term> head_args;  // as written (crisp) or linearized variables (fuzzy)
  std::vector<Term> shared;     // empty for source rules
  int rule_id = -1;
  bool hypothesis = false;
  Term rule_context;            // [] for source rules, [I|S] for hypotheses
  int context_var = -1;         // current context of the call
  int degree_var = -1;          // fuzzy output degree
  double grade = 1.0;
  double beta = 1.0;            // proximity of the source head to `predicate`
  TSequence body;
  int num_vars = 0;
  int source = -1;              // index of the originating program clause, -1 for the query
};

struct TranslatedProgram {
  Dialect dialect = Dialect::Crisp;
  double lambda = 0.0;
  std::vector<TranslatedClause> clauses;  // source clauses, then hypothesis clauses
  int next_rule_id = 0;
};

struct TranslatedQuery {
  TSequence body;
  std::vector<TranslatedClause> hypotheses;  // from implications in the goal
  int num_vars = 0;                          // query variables keep their ids
  int context_var = -1;
};

/// Variables of `hypothesis` that also occur in `enclosing` outside that
/// hypothesis, plus those in `enclosing_shared`; first-occurrence order.
std::vector<int> shared_vars(const Rule& hypothesis, const Rule& enclosing,
                             const std::vector<int>& enclosing_shared = {});
std::vector<int> shared_vars(const Rule& hypothesis, const Goal& enclosing,
                             const std::vector<int>& enclosing_shared = {});

/// Translates every clause of `program`. Rule ids are dense and assigned
/// innermost first: a hypothesis gets its id before the clause around it.
/// Proximity entries below `lambda` produce no clause.
TranslatedProgram translate_program(const Program& program, const ProximityRelation& relation, double lambda,
                                    Dialect dialect);

/// Translates a goal at the initial context. Hypothesis clauses of the goal
/// take rule ids from `program.next_rule_id` on.
TranslatedQuery translate_goal(const Query& query, const TranslatedProgram& program,
                               const ProximityRelation& relation);

}  // namespace hypolog

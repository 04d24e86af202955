#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hypolog/term.hpp"

namespace hypolog {

struct Rule;
struct Goal;
using GoalPtr = std::shared_ptr<const Goal>;
using RulePtr = std::shared_ptr<const Rule>;

/// Goal formula: the body of a rule or a query.
struct Goal {
  enum class Kind { True, Atom, Builtin, Conj, Disj, Implication };

  Kind kind = Kind::True;
  Atom atom;               // Atom, Builtin
  GoalPtr left;            // Conj, Disj
  GoalPtr right;           // Conj, Disj; consequent of an Implication
  RulePtr hypothesis;      // Implication

  static GoalPtr truth();
  static GoalPtr call(Atom a);
  static GoalPtr builtin(Atom a);
  static GoalPtr conj(GoalPtr l, GoalPtr r);
  static GoalPtr disj(GoalPtr l, GoalPtr r);
  static GoalPtr implication(RulePtr hyp, GoalPtr consequent);

  /// Variables in first-occurrence order, including those of hypotheses.
  void collect_vars(std::vector<int>& out) const;
};

bool operator==(const Goal& a, const Goal& b);

/// Graded rule `head :- body with grade`. A fact has a True body.
///
/// Hypotheses embedded in a body share the variable numbering of the clause
/// they appear in.
struct Rule {
  Atom head;
  GoalPtr body = Goal::truth();
  double grade = 1.0;

  void collect_vars(std::vector<int>& out) const;
};

bool operator==(const Rule& a, const Rule& b);

/// A source clause together with its variable table.
struct Clause {
  RulePtr rule;
  int num_vars = 0;
  std::vector<std::string> var_names;  // indexed by variable id
};

struct ProximityEquation {
  Symbol left;
  Symbol right;
  double degree = 1.0;
  friend bool operator==(const ProximityEquation&, const ProximityEquation&) = default;
};

enum class TNormKind { Min, Product, Luka };

struct Program {
  std::vector<Clause> clauses;
  std::vector<ProximityEquation> proximity;
  std::optional<double> lambda_cut;
  std::optional<TNormKind> tnorm;
  std::optional<bool> transitive;
};

/// A parsed goal with its variable table. Variables `0..num_vars-1` are the
/// query variables; names starting with `_` are not reported in answers.
struct Query {
  GoalPtr goal;
  int num_vars = 0;
  std::vector<std::string> var_names;
};

/// Structural equality up to consistent variable renaming.
bool equivalent(const Program& a, const Program& b);

}  // namespace hypolog

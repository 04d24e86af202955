#include "hypolog/translate.hpp"

#include <algorithm>

namespace hypolog {

namespace {

void collect_excluding(const Goal& g, const Rule* skip, std::vector<int>& out) {
  switch (g.kind) {
    case Goal::Kind::True: break;
    case Goal::Kind::Atom:
    case Goal::Kind::Builtin:
      for (const auto& a : g.atom.args) a.collect_vars(out);
      break;
    case Goal::Kind::Conj:
    case Goal::Kind::Disj:
      collect_excluding(*g.left, skip, out);
      collect_excluding(*g.right, skip, out);
      break;
    case Goal::Kind::Implication:
      if (g.hypothesis.get() != skip) g.hypothesis->collect_vars(out);
      collect_excluding(*g.right, skip, out);
      break;
  }
}

std::vector<int> intersect(const Rule& hypothesis, const std::vector<int>& outside,
                           const std::vector<int>& enclosing_shared) {
  std::vector<int> vars;
  hypothesis.collect_vars(vars);
  std::vector<int> out;
  for (int v : vars)
    if (std::find(outside.begin(), outside.end(), v) != outside.end() ||
        std::find(enclosing_shared.begin(), enclosing_shared.end(), v) != enclosing_shared.end())
      out.push_back(v);
  return out;
}

std::vector<Term> as_terms(const std::vector<int>& vars) {
  std::vector<Term> out;
  out.reserve(vars.size());
  for (int v : vars) out.push_back(Term::var(v));
  return out;
}

// Variable renaming over a translated clause.
template <class IntFn, class TermFn>
void walk(TGoal& g, IntFn& on_int, TermFn& on_term) {
  for (auto& a : g.atom.args) on_term(a);
  on_term(g.context);
  on_int(g.list_var);
  on_int(g.index_var);
  on_int(g.context_var);
  for (auto& t : g.shared) on_term(t);
  for (auto& p : g.pairs) {
    on_int(p.head_var);
    on_term(p.source);
    on_int(p.degree_var);
  }
  for (auto& t : g.inputs) on_term(t);
  on_int(g.degree_var);
  for (auto& s : g.inner) walk(s, on_int, on_term);
  for (auto& s : g.alternative) walk(s, on_int, on_term);
}

template <class IntFn, class TermFn>
void walk(TranslatedClause& c, IntFn& on_int, TermFn& on_term) {
  for (auto& a : c.head_args) on_term(a);
  for (auto& t : c.shared) on_term(t);
  on_term(c.rule_context);
  on_int(c.context_var);
  for (auto& g : c.body) walk(g, on_int, on_term);
  on_int(c.degree_var);
}

// Renumbers the variables of `c` densely in order of first occurrence.
void compact(TranslatedClause& c) {
  std::vector<int> order;
  std::vector<bool> seen;
  auto note = [&](int v) {
    if (v < 0) return;
    if (static_cast<size_t>(v) >= seen.size()) seen.resize(static_cast<size_t>(v) * 2 + 1, false);
    if (seen[static_cast<size_t>(v)]) return;
    seen[static_cast<size_t>(v)] = true;
    order.push_back(v);
  };
  auto note_int = [&](int& v) { note(v); };
  auto visit = [&](const Term& t, auto& self) -> void {
    switch (t.kind()) {
      case Term::Kind::Var: note(t.var_id()); break;
      case Term::Kind::Compound:
        for (const Term& a : t.args()) self(a, self);
        break;
      default: break;
    }
  };
  auto note_term = [&](Term& t) { visit(t, visit); };
  walk(c, note_int, note_term);
  int top = 0;
  for (int v : order) top = std::max(top, v + 1);
  std::vector<int> map(static_cast<size_t>(top), -1);
  for (size_t i = 0; i < order.size(); ++i) map[static_cast<size_t>(order[i])] = static_cast<int>(i);
  auto set_int = [&](int& v) {
    if (v >= 0) v = map[static_cast<size_t>(v)];
  };
  auto set_term = [&](Term& t) { t = t.rename(map); };
  walk(c, set_int, set_term);
  c.num_vars = static_cast<int>(order.size());
}

class Translator {
 public:
  Translator(const ProximityRelation& relation, double lambda, Dialect dialect, int& next_id,
             std::vector<TranslatedClause>& hypotheses, int first_var, int source)
      : relation_(relation),
        lambda_(lambda),
        dialect_(dialect),
        next_id_(next_id),
        hypotheses_(hypotheses),
        next_var_(first_var),
        source_(source) {}

  int fresh() { return next_var_++; }
  int var_count() const { return next_var_; }
  bool fuzzy() const { return dialect_ == Dialect::Fuzzy; }

  // Head predicates reached through the relation, starting with `p` itself.
  std::vector<std::pair<Symbol, double>> expansions(Symbol p) const {
    std::vector<std::pair<Symbol, double>> out{{p, 1.0}};
    if (fuzzy())
      for (const auto& [q, d] : relation_.neighbors(p))
        if (d > 0.0 && d >= lambda_) out.emplace_back(q, d);
    return out;
  }

  struct Scope {
    const Rule* rule;    // enclosing rule, or null for a query
    const Goal* query;   // enclosing goal when `rule` is null
    std::vector<int> shared;
  };

  void goal(const Goal& g, const Term& ctx, const Scope& scope, TSequence& out, std::vector<Term>& degrees) {
    switch (g.kind) {
      case Goal::Kind::True: return;
      case Goal::Kind::Builtin: {
        TGoal t;
        t.kind = TGoal::Kind::Builtin;
        t.atom = g.atom;
        out.push_back(std::move(t));
        return;
      }
      case Goal::Kind::Atom: {
        TGoal t;
        t.kind = TGoal::Kind::Call;
        t.atom = g.atom;
        t.context = ctx;
        t.list_var = fresh();
        t.index_var = fresh();
        t.context_var = fresh();
        if (fuzzy()) {
          t.degree_var = fresh();
          degrees.push_back(Term::var(t.degree_var));
        }
        out.push_back(std::move(t));
        return;
      }
      case Goal::Kind::Conj:
        goal(*g.left, ctx, scope, out, degrees);
        goal(*g.right, ctx, scope, out, degrees);
        return;
      case Goal::Kind::Disj: {
        TGoal t;
        t.kind = TGoal::Kind::Disj;
        std::vector<Term> left_deg, right_deg;
        goal(*g.left, ctx, scope, t.inner, left_deg);
        goal(*g.right, ctx, scope, t.alternative, right_deg);
        if (fuzzy()) {
          t.degree_var = fresh();
          t.inner.push_back(degree_comp(std::move(left_deg), t.degree_var));
          t.alternative.push_back(degree_comp(std::move(right_deg), t.degree_var));
          degrees.push_back(Term::var(t.degree_var));
        }
        out.push_back(std::move(t));
        return;
      }
      case Goal::Kind::Implication: {
        TGoal t;
        t.kind = TGoal::Kind::Implication;
        t.index_var = fresh();
        t.context = ctx;
        Term inner_ctx = Term::list({Term::var(t.index_var)}, ctx);
        std::vector<Term> inner_deg;
        goal(*g.right, inner_ctx, scope, t.inner, inner_deg);
        std::vector<int> shared = scope.rule ? shared_vars(*g.hypothesis, *scope.rule, scope.shared)
                                             : shared_vars(*g.hypothesis, *scope.query, scope.shared);
        t.shared = as_terms(shared);
        t.rule_id = hypothesis(*g.hypothesis, shared);
        if (fuzzy()) {
          if (inner_deg.size() == 1 && inner_deg[0].is_var()) {
            t.degree_var = inner_deg[0].var_id();
          } else {
            t.degree_var = fresh();
            t.inner.push_back(degree_comp(std::move(inner_deg), t.degree_var));
          }
          degrees.push_back(Term::var(t.degree_var));
        }
        out.push_back(std::move(t));
        return;
      }
    }
  }

  TGoal degree_comp(std::vector<Term> inputs, int output) {
    TGoal t;
    t.kind = TGoal::Kind::DegreeComp;
    t.inputs = std::move(inputs);
    t.degree_var = output;
    return t;
  }

  // Emits the clauses of hypothesis `h` and returns its registration id.
  int hypothesis(const Rule& h, const std::vector<int>& shared) {
    const int ctx_var = fresh();
    const int reg_ctx = fresh();
    const Term rule_ctx = Term::list({Term::var(fresh())}, Term::var(fresh()));
    TSequence body;
    std::vector<Term> body_deg;
    goal(*h.body, Term::var(ctx_var), Scope{&h, nullptr, shared}, body, body_deg);
    const int id = next_id_++;

    TGoal lookup;
    lookup.kind = TGoal::Kind::RegLookup;
    lookup.rule_id = id;
    lookup.shared = as_terms(shared);
    lookup.context_var = reg_ctx;
    lookup.context = Term::var(ctx_var);

    for (const auto& [pred, gamma] : expansions(h.head.predicate)) {
      TranslatedClause c = head_clause(h, pred, gamma, body, body_deg, &lookup);
      c.shared = as_terms(shared);
      c.rule_id = id;
      c.hypothesis = true;
      c.rule_context = rule_ctx;
      c.context_var = ctx_var;
      hypotheses_.push_back(std::move(c));
    }
    return id;
  }

  // Head, guards and body of one expanded clause.
  TranslatedClause head_clause(const Rule& r, Symbol pred, double beta, const TSequence& body,
                               const std::vector<Term>& body_deg, const TGoal* lookup) {
    TranslatedClause c;
    c.predicate = pred;
    c.grade = r.grade;
    c.beta = beta;
    c.source = source_;
    if (!fuzzy()) {
      c.head_args = r.head.args;
      if (lookup) c.body.push_back(*lookup);
      c.body.insert(c.body.end(), body.begin(), body.end());
      return c;
    }
    TGoal guard;
    guard.kind = TGoal::Kind::OverLambda;
    guard.value = lookup ? r.grade : beta;
    c.body.push_back(guard);
    if (lookup) c.body.push_back(*lookup);
    TGoal unify;
    unify.kind = TGoal::Kind::UnifyArgs;
    std::vector<Term> inputs{Term::real(r.grade), Term::real(beta)};
    for (const Term& s : r.head.args) {
      UnifyPair p{fresh(), s, fresh()};
      c.head_args.push_back(Term::var(p.head_var));
      inputs.push_back(Term::var(p.degree_var));
      unify.pairs.push_back(std::move(p));
    }
    if (!unify.pairs.empty()) c.body.push_back(std::move(unify));
    c.body.insert(c.body.end(), body.begin(), body.end());
    inputs.insert(inputs.end(), body_deg.begin(), body_deg.end());
    c.degree_var = fresh();
    c.body.push_back(degree_comp(std::move(inputs), c.degree_var));
    return c;
  }

  void source_clause(const Rule& r, std::vector<TranslatedClause>& out) {
    const int ctx_var = fresh();
    TSequence body;
    std::vector<Term> body_deg;
    goal(*r.body, Term::var(ctx_var), Scope{&r, nullptr, {}}, body, body_deg);
    for (const auto& [pred, beta] : expansions(r.head.predicate)) {
      TranslatedClause c = head_clause(r, pred, beta, body, body_deg, nullptr);
      c.rule_id = next_id_++;
      c.rule_context = Term();
      c.context_var = ctx_var;
      out.push_back(std::move(c));
    }
  }

 private:
  const ProximityRelation& relation_;
  double lambda_;
  Dialect dialect_;
  int& next_id_;
  std::vector<TranslatedClause>& hypotheses_;
  int next_var_;
  int source_;
};

}  // namespace

std::vector<int> shared_vars(const Rule& hypothesis, const Rule& enclosing, const std::vector<int>& enclosing_shared) {
  std::vector<int> outside;
  for (const auto& a : enclosing.head.args) a.collect_vars(outside);
  collect_excluding(*enclosing.body, &hypothesis, outside);
  return intersect(hypothesis, outside, enclosing_shared);
}

std::vector<int> shared_vars(const Rule& hypothesis, const Goal& enclosing, const std::vector<int>& enclosing_shared) {
  std::vector<int> outside;
  collect_excluding(enclosing, &hypothesis, outside);
  return intersect(hypothesis, outside, enclosing_shared);
}

TranslatedProgram translate_program(const Program& program, const ProximityRelation& relation, double lambda,
                                    Dialect dialect) {
  TranslatedProgram out;
  out.dialect = dialect;
  out.lambda = lambda;
  std::vector<TranslatedClause> hypotheses;
  for (size_t i = 0; i < program.clauses.size(); ++i) {
    const Clause& c = program.clauses[i];
    Translator t(relation, lambda, dialect, out.next_rule_id, hypotheses, c.num_vars, static_cast<int>(i));
    t.source_clause(*c.rule, out.clauses);
  }
  for (auto& c : out.clauses) compact(c);
  for (auto& c : hypotheses) compact(c);
  std::stable_sort(hypotheses.begin(), hypotheses.end(),
            [](const TranslatedClause& a, const TranslatedClause& b) { return a.rule_id < b.rule_id; });
  for (auto& c : hypotheses) out.clauses.push_back(std::move(c));
  return out;
}

TranslatedQuery translate_goal(const Query& query, const TranslatedProgram& program,
                               const ProximityRelation& relation) {
  TranslatedQuery out;
  int next_id = program.next_rule_id;
  Translator t(relation, program.lambda, program.dialect, next_id, out.hypotheses, query.num_vars, -1);
  out.context_var = t.fresh();
  std::vector<Term> degrees;
  t.goal(*query.goal, Term::var(out.context_var), {nullptr, query.goal.get(), {}}, out.body, degrees);
  out.num_vars = t.var_count();
  for (auto& c : out.hypotheses) compact(c);
  return out;
}

}  // namespace hypolog

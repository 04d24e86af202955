#include "hypolog/proptest.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "hypolog/plain_sld.hpp"
#include "hypolog/printer.hpp"
#include "hypolog/solver.hpp"

namespace hypolog {

namespace {

constexpr int kClauseVars = 3;

class Generator {
 public:
  explicit Generator(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {
    const size_t preds = std::max<size_t>(spec.predicates, 1);
    for (size_t i = 0; i < preds; ++i) {
      predicates_.push_back(Symbol("p" + std::to_string(i)));
      arities_.push_back(below(spec.max_arity + 1));
    }
    for (size_t i = 0; i < spec.constants; ++i) constants_.push_back(Symbol("c" + std::to_string(i)));
  }

  Program program() {
    Program p;
    const size_t rules = spec_.max_rules == 0 ? 0 : 1 + below(spec_.max_rules);
    for (size_t i = 0; i < rules; ++i) {
      const size_t pred = below(predicates_.size());
      Clause c;
      auto rule = std::make_shared<Rule>();
      rule->head = atom(pred);
      rule->body = chance(0.3) ? Goal::truth() : body(pred, 0);
      rule->grade = grade();
      c.rule = rule;
      c.num_vars = kClauseVars;
      c.var_names = {"X", "Y", "Z"};
      p.clauses.push_back(std::move(c));
    }
    if (spec_.fuzzy) p.proximity = proximity();
    return p;
  }

  Query query() {
    const size_t pred = below(predicates_.size());
    Atom a{predicates_[pred], {}};
    Query q;
    for (size_t i = 0; i < arities_[pred]; ++i) {
      if (constants_.empty() || chance(0.6)) {
        int id = q.num_vars++;
        q.var_names.push_back(std::string(1, static_cast<char>('A' + id)));
        a.args.push_back(Term::var(id));
      } else {
        a.args.push_back(Term::atom(constants_[below(constants_.size())]));
      }
    }
    q.goal = Goal::call(std::move(a));
    return q;
  }

  double pick_lambda() { return spec_.fuzzy ? std::vector<double>{0.0, 0.25, 0.5}[below(3)] : 0.0; }
  TNorm pick_tnorm() {
    static const TNormKind kinds[] = {TNormKind::Min, TNormKind::Product, TNormKind::Luka};
    return spec_.fuzzy ? TNorm(kinds[below(3)]) : TNorm();
  }
  bool pick_transitive() { return spec_.fuzzy && chance(0.3); }

 private:
  size_t below(size_t n) { return n == 0 ? 0 : static_cast<size_t>(rng_() % n); }
  bool chance(double p) { return static_cast<double>(rng_() % 1000) < p * 1000.0; }

  double grade() {
    if (!spec_.fuzzy || spec_.grades.empty() || !chance(spec_.graded_fraction)) return 1.0;
    return spec_.grades[below(spec_.grades.size())];
  }

  Term argument() {
    const size_t roll = below(10);
    if (roll < 5 || constants_.empty()) return Term::var(static_cast<int>(below(kClauseVars)));
    if (roll < 9) return Term::atom(constants_[below(constants_.size())]);
    return Term::compound("f", {Term::var(static_cast<int>(below(kClauseVars)))});
  }

  Atom atom(size_t pred) {
    Atom a{predicates_[pred], {}};
    for (size_t i = 0; i < arities_[pred]; ++i) a.args.push_back(argument());
    return a;
  }

  // Calls go to predicates with a larger index; self calls are rare.
  GoalPtr call(size_t from) {
    if (chance(0.015)) return Goal::call(atom(from));
    if (from + 1 >= predicates_.size()) return builtin();
    return Goal::call(atom(from + 1 + below(predicates_.size() - from - 1)));
  }

  GoalPtr builtin() {
    switch (below(4)) {
      case 0: return Goal::truth();
      case 1: return Goal::builtin(Atom{Symbol("fail"), {}});
      case 2:
        if (!constants_.empty())
          return Goal::builtin(Atom{Symbol("="), {Term::var(static_cast<int>(below(kClauseVars))),
                                                 Term::atom(constants_[below(constants_.size())])}});
        [[fallthrough]];
      default: {
        static const char* ops[] = {"<", ">", "=<", ">="};
        return Goal::builtin(Atom{Symbol(ops[below(4)]), {Term::integer(static_cast<int64_t>(below(3))),
                                                          Term::integer(static_cast<int64_t>(below(3)))}});
      }
    }
  }

  GoalPtr literal(size_t owner, size_t nesting) {
    const size_t roll = below(100);
    if (roll < 12) return builtin();
    if (roll < 40 && nesting < spec_.max_nesting) return implication(owner, nesting);
    if (roll < 45) return Goal::disj(call(owner), call(owner));
    return call(owner);
  }

  GoalPtr implication(size_t owner, size_t nesting) {
    auto hyp = std::make_shared<Rule>();
    const size_t head = below(predicates_.size());
    hyp->head = atom(head);
    hyp->body = chance(0.5) ? Goal::truth() : body(head, nesting + 1);
    hyp->grade = grade();
    GoalPtr consequent = chance(0.3) && nesting + 1 < spec_.max_nesting ? implication(owner, nesting + 1)
                                                                        : call(owner);
    return Goal::implication(std::move(hyp), std::move(consequent));
  }

  GoalPtr body(size_t owner, size_t nesting) {
    const size_t len = spec_.max_body == 0 ? 1 : 1 + below(spec_.max_body);
    std::vector<GoalPtr> parts;
    for (size_t i = 0; i < len; ++i) parts.push_back(literal(owner, nesting));
    GoalPtr g = parts.back();
    for (size_t i = len - 1; i-- > 0;) g = Goal::conj(parts[i], g);
    return g;
  }

  std::vector<ProximityEquation> proximity() {
    std::vector<ProximityEquation> out;
    const size_t count = below(spec_.proximity + 1);
    for (size_t tries = 0; out.size() < count && tries < 20; ++tries) {
      Symbol a, b;
      if (chance(0.5) && constants_.size() > 1) {
        a = constants_[below(constants_.size())];
        b = constants_[below(constants_.size())];
      } else {
        const size_t i = below(predicates_.size()), j = below(predicates_.size());
        if (arities_[i] != arities_[j]) continue;
        a = predicates_[i];
        b = predicates_[j];
      }
      if (a == b) continue;
      bool seen = false;
      for (const auto& e : out)
        seen = seen || (e.left == a && e.right == b) || (e.left == b && e.right == a);
      if (seen) continue;
      out.push_back({a, b, spec_.grades.empty() ? 0.5 : spec_.grades[below(spec_.grades.size())]});
    }
    return out;
  }

  const GenSpec& spec_;
  std::mt19937_64 rng_;
  std::vector<Symbol> predicates_;
  std::vector<size_t> arities_;
  std::vector<Symbol> constants_;
};

size_t goal_depth(const Goal& g);

size_t rule_depth(const Rule& r) { return goal_depth(*r.body); }

size_t goal_depth(const Goal& g) {
  switch (g.kind) {
    case Goal::Kind::Conj:
    case Goal::Kind::Disj: return std::max(goal_depth(*g.left), goal_depth(*g.right));
    case Goal::Kind::Implication: return std::max(1 + rule_depth(*g.hypothesis), 1 + goal_depth(*g.right));
    default: return 0;
  }
}

bool has_implication(const Goal& g) { return goal_depth(g) > 0; }

struct Run {
  std::vector<Answer> answers;
  bool exhausted = false;
};

Run run(const Solver& solver, const Query& query) {
  Run r;
  try {
    auto stream = solver.solve(query);
    r.answers = collect(*stream);
  } catch (const BudgetExceeded&) {
    r.exhausted = true;
  }
  return r;
}

SolverSettings settings_for(const TestCase& t, const CheckOptions& o) {
  SolverSettings s;
  s.lambda = t.lambda;
  s.tnorm = t.tnorm;
  s.transitive = t.transitive;
  s.depth_budget = o.depth_budget;
  s.step_limit = o.step_limit;
  return s;
}

Run run_compiled(const TestCase& t, const CheckOptions& o, std::optional<Dialect> dialect = std::nullopt) {
  SolveOptions options;
  options.lambda = t.lambda;
  options.tnorm = t.tnorm;
  options.depth_budget = o.depth_budget;
  options.step_limit = o.step_limit;
  auto relation = ProximityRelation::build(t.program.proximity, t.tnorm, t.transitive);
  Run r;
  try {
    auto engine = dialect ? CompiledEngine(translate_program(t.program, relation, t.lambda, *dialect), relation,
                                           options, o.compiled)
                          : CompiledEngine::from_program(t.program, relation, options, o.compiled);
    r.answers = collect(*engine.solve(t.query));
  } catch (const BudgetExceeded&) {
    r.exhausted = true;
  }
  return r;
}

Comparison compare(const std::string& ln, const Run& l, const std::string& rn, const Run& r) {
  Comparison c;
  c.left_engine = ln;
  c.right_engine = rn;
  c.left = l.answers;
  c.right = r.answers;
  if (l.exhausted || r.exhausted) c.outcome = Comparison::Outcome::Inconclusive;
  else if (!same_answers(l.answers, r.answers, 0.0)) c.outcome = Comparison::Outcome::Counterexample;
  return c;
}

Comparison compare_once(const TestCase& t, const CheckOptions& o) {
  const auto settings = settings_for(t, o);
  const Run list = run(Solver(t.program, EngineKind::MetaList, settings), t.query);
  const Run tree = run(Solver(t.program, EngineKind::MetaTree, settings), t.query);
  const Run compiled = run_compiled(t, o);
  Comparison c = compare("meta-a", list, "meta-b", tree);
  if (c.outcome != Comparison::Outcome::Pass) return c;
  c = compare("meta-a", list, "compiled", compiled);
  if (c.outcome != Comparison::Outcome::Pass) return c;
  const bool plain = o.plain_oracle && t.program.proximity.empty() &&
                     std::none_of(t.program.clauses.begin(), t.program.clauses.end(),
                                  [](const Clause& cl) { return cl.rule->grade < 1.0 || has_implication(*cl.rule->body); });
  if (plain) {
    Run oracle;
    try {
      oracle.answers = plain_sld(t.program, t.query, o.depth_budget, o.step_limit);
    } catch (const BudgetExceeded&) {
      oracle.exhausted = true;
    }
    c = compare("meta-a", list, "plain-sld", oracle);
  }
  return c;
}

std::string format_run(const std::vector<Answer>& answers) {
  std::string out;
  for (const Answer& a : answers) out += "%   " + a.to_string() + "\n";
  return out.empty() ? "%   (none)\n" : out;
}

void attach_report(Comparison& c, const TestCase& t) {
  std::ostringstream os;
  os << case_text(t) << "% " << c.left_engine << ":\n" << format_run(c.left) << "% " << c.right_engine << ":\n"
     << format_run(c.right);
  c.report = os.str();
}

}  // namespace

Program gen_program(const GenSpec& spec) { return Generator(spec).program(); }

TestCase gen_case(const GenSpec& spec) {
  Generator g(spec);
  TestCase t;
  t.program = g.program();
  t.query = g.query();
  t.lambda = g.pick_lambda();
  t.tnorm = g.pick_tnorm();
  t.transitive = g.pick_transitive();
  t.seed = spec.seed;
  return t;
}

size_t implication_depth(const Program& program) {
  size_t d = 0;
  for (const Clause& c : program.clauses) d = std::max(d, rule_depth(*c.rule));
  return d;
}

TestCase shrink(TestCase test, const CheckOptions& options) {
  for (size_t i = 0; i < test.program.clauses.size();) {
    TestCase smaller = test;
    smaller.program.clauses.erase(smaller.program.clauses.begin() + static_cast<std::ptrdiff_t>(i));
    if (compare_once(smaller, options).outcome == Comparison::Outcome::Counterexample) test = std::move(smaller);
    else ++i;
  }
  return test;
}

Comparison check_equivalence(const TestCase& test, const CheckOptions& options) {
  Comparison c = compare_once(test, options);
  if (c.outcome == Comparison::Outcome::Counterexample) {
    TestCase small = shrink(test, options);
    c = compare_once(small, options);
    attach_report(c, small);
  }
  return c;
}

Comparison check_crisp_degeneration(const TestCase& test, const CheckOptions& options) {
  Comparison c = compare("compiled-fuzzy", run_compiled(test, options, Dialect::Fuzzy), "compiled-crisp",
                         run_compiled(test, options, Dialect::Crisp));
  if (c.outcome == Comparison::Outcome::Pass)
    for (const auto* side : {&c.left, &c.right})
      for (const Answer& a : *side)
        if (a.degree != 1.0) c.outcome = Comparison::Outcome::Counterexample;
  if (c.outcome == Comparison::Outcome::Counterexample) attach_report(c, test);
  return c;
}

Comparison check_lambda_monotone(const TestCase& test, double delta, const CheckOptions& options) {
  TestCase raised = test;
  raised.lambda = std::min(1.0, test.lambda + delta);
  const auto low = run(Solver(test.program, EngineKind::MetaTree, settings_for(test, options)), test.query);
  const auto high = run(Solver(raised.program, EngineKind::MetaTree, settings_for(raised, options)), raised.query);
  Comparison c;
  c.left_engine = "lambda " + format_number(test.lambda);
  c.right_engine = "lambda " + format_number(raised.lambda);
  c.left = low.answers;
  c.right = high.answers;
  if (low.exhausted || high.exhausted) c.outcome = Comparison::Outcome::Inconclusive;
  else if (!sub_multiset(high.answers, low.answers, 0.0)) c.outcome = Comparison::Outcome::Counterexample;
  if (c.outcome == Comparison::Outcome::Counterexample) attach_report(c, test);
  return c;
}

uint64_t seed_from_env(uint64_t fallback) {
  const char* env = std::getenv("HYPOLOG_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  return std::strtoull(env, nullptr, 10);
}

std::string case_text(const TestCase& test) {
  Program p = test.program;
  p.lambda_cut = test.lambda;
  p.tnorm = test.tnorm.kind();
  p.transitive = test.transitive;
  std::ostringstream os;
  os << "% seed " << test.seed << "\n" << format_program(p) << "% goal: " << format_query(test.query) << "\n";
  return os.str();
}

}  // namespace hypolog

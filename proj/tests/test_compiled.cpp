#include "support.hpp"

#include "hypolog/bench.hpp"
#include "hypolog/compiled.hpp"
#include "hypolog/parser.hpp"
#include "hypolog/proptest.hpp"

using namespace hypolog;

namespace {

struct Compiled {
  Program program;
  ProximityRelation relation;
  CompiledEngine engine;

  explicit Compiled(std::string_view text, SolveOptions options = {}, CompiledConfig config = {})
      : program(parse_program(text)),
        relation(ProximityRelation::build(program.proximity, options.tnorm, false)),
        engine(CompiledEngine::from_program(program, relation, options, config)) {}
};

std::vector<Answer> solve(std::string_view text, std::string_view goal, SolveOptions options = {}) {
  Compiled c(text, options);
  const Query q = parse_goal(goal);
  return collect(*c.engine.solve(q));
}

using Seq = std::vector<int64_t>;

}  // namespace

TEST_CASE("cut test") {
  CHECK(over_lambda(0.6, 0.5));
  CHECK(over_lambda(0.5, 0.5));
  CHECK_FALSE(over_lambda(0.4, 0.5));
}

TEST_CASE("worked examples") {
  CHECK(solve("a :- (d => b), e.\nb :- c.\nc :- d.\ne.", "a").size() == 1);
  CHECK(solve("p :- (q :- r) => q.\nr.\nr.", "p").size() == 2);
  CHECK(solve("p :- (q => q), q.", "p").empty());
  CHECK(solve("p :- q => q => q.", "p").size() == 2);
  CHECK(solve("p(X) :- g(X), (q(X) => r).\ng(1).\nr :- q(2).", "p(X)").empty());
  CHECK(solve("p :- g(X,Y), (q(X,Y) => q(1,2)).\ng(X,X).", "p").empty());

  SolveOptions o;
  o.lambda = 0.5;
  auto a = solve("g(1) with 0.7.\ng ~ h = 0.6.", "h(1)", o);
  REQUIRE(a.size() == 1);
  CHECK(a[0].degree == 0.6);
  o.lambda = 0.7;
  CHECK(solve("g(1) with 0.7.\ng ~ h = 0.6.", "h(1)", o).empty());
}

TEST_CASE("implications in the goal") {
  CHECK(solve("", "q => q").size() == 1);
  CHECK(solve("", "(q => q), q").empty());
  CHECK(solve("r(1).", "r(X) => (r(Y), Y = 1)").size() == 2);
  auto a = solve("p(a).", "X = a, (q(X) => q(Y))");
  REQUIRE(a.size() == 1);
  CHECK(a[0].to_string() == "X = a, Y = a with degree 1");
}

TEST_CASE("registrations of nested implications") {
  Compiled c("p :- q => q => q.");
  const Query q = parse_goal("p");
  auto run = c.engine.solve(q);
  REQUIRE(run->next());
  const auto& regs = run->registrations();
  REQUIRE(regs.count(1) == 1);
  REQUIRE(regs.count(0) == 1);
  CHECK(regs.lookup(1)[0].context.sequence() == Seq{0});
  CHECK(regs.lookup(0)[0].context.sequence() == Seq{0, 1});
  CHECK(regs.lookup(0)[0].context.to_string() == "[1,0]");
  CHECK(run->next());
  CHECK_FALSE(run->next());
}

TEST_CASE("re-solving an implication registers under a new index") {
  for (bool trim : {false, true}) {
    CompiledConfig config;
    config.trim_registrations = trim;
    Compiled c("p :- (r ; r), (q => q).\nr.", {}, config);
    const Query q = parse_goal("p");
    auto run = c.engine.solve(q);
    REQUIRE(run->next());
    REQUIRE(run->registrations().count(0) == 1);
    CHECK(run->registrations().lookup(0)[0].context.sequence() == Seq{0});
    REQUIRE(run->next());
    const auto& entries = run->registrations().lookup(0);
    REQUIRE(entries.size() == (trim ? 1u : 2u));
    CHECK(entries.back().context.sequence() == Seq{1});
    CHECK_FALSE(run->next());
  }
}

TEST_CASE("one registration per recursion step") {
  for (int n : {1, 10, 100}) {
    const BenchProgram b = gen_bench("hypo2", n);
    auto engine = CompiledEngine::from_program(b.program, ProximityRelation(), {});
    auto run = engine.solve(b.query);
    const auto answers = collect(*run);
    CHECK(answers.size() == static_cast<size_t>(n));
    CHECK(run->registrations().size() == static_cast<size_t>(n));
    int hypothesis_id = -1;
    for (const auto& c : engine.program().clauses)
      if (c.hypothesis) hypothesis_id = c.rule_id;
    CHECK(run->registrations().count(hypothesis_id) == static_cast<size_t>(n));
  }
}

TEST_CASE("larger benchmark instances agree with the meta engine") {
  for (const auto& [name, n] : std::vector<std::pair<std::string, int>>{{"hypo1", 5}, {"hypo2", 300}, {"hypo3", 50}}) {
    const BenchProgram b = gen_bench(name, n);
    auto compiled = CompiledEngine::from_program(b.program, ProximityRelation(), {});
    const auto mine = collect(*compiled.solve(b.query));
    MetaEngine meta(b.program, ProximityRelation(), {}, Strategy::Tree);
    const auto oracle = collect(*meta.solve(b.query));
    CHECK(!mine.empty());
    CHECK(same_answers(mine, oracle, 0.0));
  }
}

TEST_CASE("step limit") {
  SolveOptions o;
  o.step_limit = 500;
  Compiled c("loop :- loop.", o);
  const Query q = parse_goal("loop");
  auto run = c.engine.solve(q);
  CHECK_THROWS_AS(collect(*run), BudgetExceeded);
}

TEST_CASE("configuration switches do not change answers") {
  size_t compared = 0;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.fuzzy = seed % 3 == 0;
    const TestCase t = gen_case(spec);
    SolveOptions o;
    o.lambda = t.lambda;
    o.tnorm = t.tnorm;
    o.depth_budget = 200;
    o.step_limit = 200000;
    const auto rel = ProximityRelation::build(t.program.proximity, t.tnorm, t.transitive);
    CompiledConfig plain, trimmed, unindexed;
    trimmed.trim_registrations = true;
    unindexed.first_arg_index = false;
    try {
      const auto a = collect(*CompiledEngine::from_program(t.program, rel, o, plain).solve(t.query));
      const auto b = collect(*CompiledEngine::from_program(t.program, rel, o, trimmed).solve(t.query));
      const auto c = collect(*CompiledEngine::from_program(t.program, rel, o, unindexed).solve(t.query));
      INFO(case_text(t));
      CHECK(same_answers(a, b, 0.0));
      CHECK(same_answers(a, c, 0.0));
      for (const auto& ans : a)
        for (const auto& [name, value] : ans.bindings) {
          bool known = false;
          for (const auto& v : t.query.var_names) known = known || v == name;
          CHECK(known);
        }
      ++compared;
    } catch (const BudgetExceeded&) {
    }
  }
  CHECK(compared >= 270);
}

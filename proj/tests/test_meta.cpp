#include "support.hpp"

#include "hypolog/builtins.hpp"
#include "hypolog/parser.hpp"
#include "hypolog/proptest.hpp"
#include "hypolog/solver.hpp"

using namespace hypolog;

namespace {

const EngineKind kMeta[] = {EngineKind::MetaList, EngineKind::MetaTree};

std::vector<Answer> solve(std::string_view program, std::string_view goal, EngineKind kind,
                          SolverSettings settings = {}) {
  const Program p = parse_program(program);
  Solver s(p, kind, effective_settings(p, settings));
  const Query q = parse_goal(goal);
  auto stream = s.solve(q);
  return collect(*stream);
}

std::vector<TraceEvent> trace(std::string_view program, std::string_view goal) {
  const Program p = parse_program(program);
  Solver s(p, EngineKind::MetaTree, {});
  const Query q = parse_goal(goal);
  std::vector<TraceEvent> events;
  auto stream = s.solve(q, [&](const TraceEvent& e) { events.push_back(e); });
  collect(*stream);
  return events;
}

}  // namespace

TEST_CASE("worked examples") {
  struct Case {
    const char* program;
    const char* goal;
    size_t answers;
  };
  const Case cases[] = {
      {"a :- (d => b), e.\nb :- c.\nc :- d.\ne.", "a", 1},
      {"p :- (q :- r) => q.\nr.\nr.", "p", 2},
      {"p :- (q => q), q.", "p", 0},
      {"p :- q => q => q.", "p", 2},
      {"p(X) :- g(X), (q(X) => r).\ng(1).\nr :- q(2).", "p(X)", 0},
      {"p :- g(X,Y), (q(X,Y) => q(1,2)).\ng(X,X).", "p", 0},
  };
  for (const auto& c : cases)
    for (EngineKind k : kMeta) {
      INFO(c.program, " with ", engine_name(k));
      const auto answers = solve(c.program, c.goal, k);
      CHECK(answers.size() == c.answers);
      for (const auto& a : answers) CHECK(a.degree == 1.0);
    }
}

// Hand application of the resolution rule: grade 0.7, head proximity 0.6,
// argument 1 against 1 at degree 1; min gives 0.6.
TEST_CASE("graded fact reached through proximity") {
  const char* program = "g(1) with 0.7.\ng ~ h = 0.6.";
  for (EngineKind k : kMeta) {
    SolverSettings s;
    s.lambda = 0.5;
    auto answers = solve(program, "h(1)", k, s);
    REQUIRE(answers.size() == 1);
    CHECK(answers[0].degree == 0.6);
    s.lambda = 0.7;
    CHECK(solve(program, "h(1)", k, s).empty());
    s.lambda = 0.6;
    CHECK(solve(program, "h(1)", k, s).size() == 1);
    s.tnorm = TNorm(TNormKind::Product);
    s.lambda = 0.0;
    answers = solve(program, "h(1)", k, s);
    REQUIRE(answers.size() == 1);
    CHECK(answers[0].degree == 0.7 * 0.6);
  }
}

TEST_CASE("bindings in answers") {
  for (EngineKind k : kMeta) {
    auto answers = solve("p(a).\np(b).\nq(X, f(X)).", "p(X), q(X, Y)", k);
    REQUIRE(answers.size() == 2);
    CHECK(answers[0].to_string() == "X = a, Y = f(a) with degree 1");
    CHECK(answers[1].to_string() == "X = b, Y = f(b) with degree 1");
    auto open = solve("p(_).", "p(X)", k);
    REQUIRE(open.size() == 1);
    CHECK(open[0].canonical() == solve("p(Z).", "p(X)", k)[0].canonical());
  }
}

TEST_CASE("hypotheses do not outlive their implication") {
  for (EngineKind k : kMeta) {
    CHECK(solve("p :- (q => true), q.", "p", k).empty());
    CHECK(solve("p :- (q => q) ; q.", "p", k).size() == 1);
    CHECK(solve("", "(q => q), q", k).empty());
    CHECK(solve("", "q => q", k).size() == 1);
  }
}

TEST_CASE("hypotheses keep bindings made before assumption") {
  for (EngineKind k : kMeta) {
    CHECK(solve("p(X) :- X = 1, (q(X) => q(1)).", "p(Y)", k).size() == 1);
    CHECK(solve("p(X) :- X = 1, (q(X) => q(2)).", "p(Y)", k).empty());
    // Unbound hypothesis variables are fresh at each use.
    CHECK(solve("p :- q(X) => (q(1), q(2)).", "p", k).size() == 1);
  }
}

TEST_CASE("arithmetic and disjunction") {
  for (EngineKind k : kMeta) {
    auto a = solve("len([], 0).\nlen([_|T], N) :- len(T, M), N is M + 1.", "len([a,b,c], N)", k);
    REQUIRE(a.size() == 1);
    CHECK(a[0].to_string() == "N = 3 with degree 1");
    CHECK(solve("p(1).\np(2).\np(3).", "p(X), (X < 2 ; X >= 3)", k).size() == 2);
    CHECK_THROWS_AS(solve("", "X is Y + 1", k), EvalError);
  }
}

TEST_CASE("trace of the first worked example") {
  const auto events = trace("a :- (d => b), e.\nb :- c.\nc :- d.\ne.", "a");
  size_t outer = 0, inner = 0;
  for (const auto& e : events) (e.depth == 0 ? outer : inner)++;
  CHECK(outer == 4);
  CHECK(inner == 4);
  REQUIRE(events.size() == 8);
  CHECK(events.front().state == "⟨a, Π, {}, 1⟩");
  CHECK(events[2].state == "⟨b, Π ∪ {d}, {}, 1⟩");
  CHECK(events[5].state == "⟨□, Π ∪ {d}, {}, 1⟩");
  CHECK(events[6].label == "rule 2");
  CHECK(events.back().state == "⟨□, Π, {}, 1⟩");

  const auto t = trace("", "true");
  REQUIRE(t.size() == 2);
  CHECK(t[1].state == "⟨□, Π, {}, 1⟩");
  CHECK(trace("", "fail").empty());
}

TEST_CASE("depth budget and step limit") {
  const Program p = parse_program("loop :- loop.\nloop.");
  SolverSettings s;
  s.depth_budget = 10;
  Solver solver(p, EngineKind::MetaTree, s);
  const Query q = parse_goal("loop");
  auto stream = solver.solve(q);
  CHECK(collect(*stream).size() == 10);
  CHECK(stream->stats().budget_hit);

  s.depth_budget.reset();
  s.step_limit = 1000;
  Solver bounded(p, EngineKind::MetaList, s);
  auto endless = bounded.solve(q);
  CHECK_THROWS_AS(collect(*endless), BudgetExceeded);
}

TEST_CASE("both strategies give identical answer sequences") {
  size_t compared = 0;
  for (uint64_t seed = 0; seed < 400; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.fuzzy = seed % 2 == 0;
    const TestCase t = gen_case(spec);
    SolverSettings s;
    s.lambda = t.lambda;
    s.tnorm = t.tnorm;
    s.transitive = t.transitive;
    s.depth_budget = 200;
    s.step_limit = 200000;
    try {
      auto a = collect(*Solver(t.program, EngineKind::MetaList, s).solve(t.query));
      auto b = collect(*Solver(t.program, EngineKind::MetaTree, s).solve(t.query));
      INFO(case_text(t));
      REQUIRE(a.size() == b.size());
      for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].canonical() == b[i].canonical());
        CHECK(a[i].degree == b[i].degree);
      }
      ++compared;
    } catch (const BudgetExceeded&) {
    }
  }
  CHECK(compared >= 360);
}

TEST_CASE("every answer degree clears the cut") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.fuzzy = true;
    const TestCase t = gen_case(spec);
    SolverSettings s;
    s.lambda = t.lambda;
    s.tnorm = t.tnorm;
    s.depth_budget = 200;
    s.step_limit = 200000;
    try {
      for (const auto& a : collect(*Solver(t.program, EngineKind::MetaTree, s).solve(t.query))) {
        CHECK(a.degree >= t.lambda);
        CHECK(a.degree > 0.0);
        CHECK(a.degree <= 1.0);
      }
    } catch (const BudgetExceeded&) {
    }
  }
}

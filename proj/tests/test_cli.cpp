#include "support.hpp"

#include <sstream>

#include "hypolog/bench.hpp"
#include "hypolog/parser.hpp"
#include "hypolog/printer.hpp"
#include "hypolog/session.hpp"

using namespace hypolog;

namespace {

std::string transcript(std::string_view program, std::string_view input, SessionConfig config = {}) {
  std::ostringstream out;
  Session s(out, config);
  if (!program.empty()) s.load_text(program);
  std::istringstream in{std::string(input)};
  s.repl(in, false);
  return out.str();
}

}  // namespace

TEST_CASE("two answers, one at a time") {
  const char* program = "p :- (q :- r) => q.\nr.\nr.";
  CHECK(transcript(program, "?- p.\n;\n;\n") == "true with degree 1\ntrue with degree 1\nno\n");
  SessionConfig all;
  all.limit.reset();
  CHECK(transcript(program, "p.\n", all) == "true with degree 1\ntrue with degree 1\n");
}

TEST_CASE("unknown predicate") { CHECK(transcript("p.", "?- undefined_pred.\n") == "no\n"); }

TEST_CASE("cut set from the prompt") {
  const char* program = "g(1) with 0.7.\ng ~ h = 0.6.";
  CHECK(transcript(program, "h(1).\n") == "true with degree 0.6\n");
  CHECK(transcript(program, "set lambda 0.9\nh(1).\n") == "no\n");
  CHECK(transcript(program, "set tnorm product\nh(X).\n") == "X = 1 with degree 0.42\n");
}

TEST_CASE("directives apply until a setting replaces them") {
  const char* program = ":- lambda_cut(0.9).\ng(1) with 0.7.\ng ~ h = 0.6.";
  CHECK(transcript(program, "h(1).\n") == "no\n");
  CHECK(transcript(program, "set lambda 0.5\nh(1).\n") == "true with degree 0.6\n");
}

TEST_CASE("engines answer alike") {
  const char* program = "p(X) :- g(X), (q(X) => r(X)).\ng(1).\ng(2).\nr(X) :- q(X).";
  for (const char* e : {"meta-a", "meta-b", "compiled"}) {
    const std::string input = std::string("set engine ") + e + "\nset limit all\np(X).\n";
    CHECK(transcript(program, input) == "X = 1 with degree 1\nX = 2 with degree 1\n");
  }
}

TEST_CASE("errors do not end the loop") {
  const std::string out = transcript("p.", "p(\nset lambda 3\nset colour red\nX is Y + 1.\nemit nonsense\np.\n");
  CHECK(out.find("error:") == 0);
  CHECK(out.substr(out.size() - 19) == "true with degree 1\n");
  size_t errors = 0;
  for (size_t at = out.find("error:"); at != std::string::npos; at = out.find("error:", at + 1)) ++errors;
  CHECK(errors == 5);
}

TEST_CASE("quit stops reading") { CHECK(transcript("p.", "quit\np.\n").empty()); }

TEST_CASE("emit and trace") {
  const std::string emitted = transcript("p :- q => q.", "emit crisp-prop\n");
  CHECK(same_listing(emitted, "p([],A) :- (q([B|A],C) :- chk([B|A],C)) => q(_,[B|A])."));
  CHECK(transcript("p :- q => q.", "emit\n").find("reg(0,[],") != std::string::npos);

  const std::string traced = transcript("p.", "trace on\np.\ntrace off\np.\n");
  CHECK(traced == "start: ⟨p, Π, {}, 1⟩\nrule 1: ⟨□, Π, {}, 1⟩\ntrue with degree 1\ntrue with degree 1\n");
  const std::string compiled = transcript("p.", "set engine compiled\ntrace on\np.\n");
  CHECK(compiled.find("% trace") == 0);
}

TEST_CASE("benchmark programs") {
  const BenchProgram h1 = gen_bench("hypo1", 2);
  CHECK(equivalent(h1.program, parse_program("p :- a1 => a2 => (a1, a2).")));
  CHECK(format_query(h1.query) == format_query(parse_goal("p")));
  const BenchProgram h3 = gen_bench("hypo3", 1);
  CHECK(equivalent(h3.program, parse_program("p :- a => a.")));
  const BenchProgram h2 = gen_bench("hypo2", 3);
  CHECK(equivalent(h2.program, parse_program("p(0) :- a.\np(N) :- N > 0, N1 is N - 1, (a => p(N1)).")));
  // Answer count from the meta engine at n = 3.
  MetaEngine meta(h2.program, ProximityRelation(), {}, Strategy::List);
  CHECK(collect(*meta.solve(h2.query)).size() == 3);

  CHECK_THROWS_AS(gen_bench("hypo1", 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_bench("hypo4", 3), std::invalid_argument);
}

TEST_CASE("benchmark reports") {
  CHECK(run_bench({"hypo2"}, {}, {100}).rows.empty());

  const auto pair = run_bench({"hypo2"}, {EngineKind::MetaTree, EngineKind::Compiled}, {100});
  REQUIRE(pair.rows.size() == 2);
  CHECK(pair.rows[0].answers == 100);
  CHECK(pair.rows[1].answers == 100);

  const auto all = run_bench({"hypo1"}, {EngineKind::MetaList, EngineKind::MetaTree, EngineKind::Compiled}, {50});
  REQUIRE(all.rows.size() == 3);
  CHECK(all.to_text().find("hypo1") != std::string::npos);

  const std::string csv = all.to_csv();
  CHECK(csv.rfind(std::string(kBenchCsvHeader) + "\n", 0) == 0);
  CHECK(BenchReport::from_csv(csv).rows == all.rows);
  CHECK_THROWS_AS(BenchReport::from_csv("nope\n"), std::invalid_argument);
  CHECK_THROWS_AS(BenchReport::from_csv(std::string(kBenchCsvHeader) + "\na,b\n"), std::invalid_argument);
}

TEST_CASE("inference counts are deterministic") {
  const auto a = run_bench({"hypo3"}, {EngineKind::MetaTree, EngineKind::Compiled}, {30}, 1);
  const auto b = run_bench({"hypo3"}, {EngineKind::MetaTree, EngineKind::Compiled}, {30}, 1);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].inferences == b.rows[i].inferences);
}

#include <doctest.h>

#include "hypolog/parser.hpp"
#include "hypolog/printer.hpp"
#include "hypolog/proptest.hpp"

using namespace hypolog;

namespace {

const Goal& body_of(const Program& p, size_t i) { return *p.clauses.at(i).rule->body; }

}  // namespace

TEST_CASE("program with a hypothetical rule in an implication") {
  Program p = parse_program("p :- (q :- r) => q.\nr.\nr.");
  REQUIRE(p.clauses.size() == 3);
  const Goal& g = body_of(p, 0);
  REQUIRE(g.kind == Goal::Kind::Implication);
  CHECK(g.hypothesis->head.predicate.name() == "q");
  CHECK(g.hypothesis->body->kind == Goal::Kind::Atom);
  CHECK(g.hypothesis->body->atom.predicate.name() == "r");
  CHECK(g.right->kind == Goal::Kind::Atom);
  CHECK(body_of(p, 1).kind == Goal::Kind::True);
}

TEST_CASE("empty input") {
  Program p = parse_program("");
  CHECK(p.clauses.empty());
  CHECK(p.proximity.empty());
  CHECK(parse_program("% only a comment\n").clauses.empty());
}

TEST_CASE("graded rule with conjunction and implication") {
  Program p = parse_program("p(X) :- g(X), (q(X) => r) with 0.8.");
  REQUIRE(p.clauses.size() == 1);
  const Rule& r = *p.clauses[0].rule;
  CHECK(r.grade == 0.8);
  REQUIRE(r.body->kind == Goal::Kind::Conj);
  CHECK(r.body->left->atom.predicate.name() == "g");
  REQUIRE(r.body->right->kind == Goal::Kind::Implication);
  CHECK(r.body->right->hypothesis->head.predicate.name() == "q");
  // Both occurrences of X are one variable.
  CHECK(r.head.args[0] == r.body->left->atom.args[0]);
  CHECK(r.head.args[0] == r.body->right->hypothesis->head.args[0]);
}

TEST_CASE("goals") {
  Query q = parse_goal("p(X).");
  CHECK(q.goal->kind == Goal::Kind::Atom);
  CHECK(q.num_vars == 1);
  CHECK(q.var_names[0] == "X");

  Query imp = parse_goal("a => a.");
  REQUIRE(imp.goal->kind == Goal::Kind::Implication);
  CHECK(imp.goal->hypothesis->head.predicate.name() == "a");
  CHECK(imp.goal->right->atom.predicate.name() == "a");

  Query n = parse_goal("p(3000)");
  REQUIRE(n.goal->atom.args.size() == 1);
  CHECK(n.goal->atom.args[0].kind() == Term::Kind::Int);
  CHECK(n.goal->atom.args[0].int_value() == 3000);
}

TEST_CASE("implication associates to the right") {
  Query q = parse_goal("a => b => c");
  REQUIRE(q.goal->kind == Goal::Kind::Implication);
  CHECK(q.goal->hypothesis->head.predicate.name() == "a");
  REQUIRE(q.goal->right->kind == Goal::Kind::Implication);
  CHECK(q.goal->right->hypothesis->head.predicate.name() == "b");
  CHECK(q.goal->right->right->atom.predicate.name() == "c");
}

TEST_CASE("implication binds tighter than conjunction on its right") {
  Query q = parse_goal("a => b, c");
  REQUIRE(q.goal->kind == Goal::Kind::Conj);
  CHECK(q.goal->left->kind == Goal::Kind::Implication);
  CHECK(q.goal->right->atom.predicate.name() == "c");
}

TEST_CASE("builtins come from a fixed table") {
  Query q = parse_goal("X is 1 + 2, X > 2, Y = a, Y \\= b, true, fail, foo");
  std::vector<Goal::Kind> kinds;
  const Goal* g = q.goal.get();
  while (g->kind == Goal::Kind::Conj) {
    kinds.push_back(g->left->kind);
    g = g->right.get();
  }
  kinds.push_back(g->kind);
  REQUIRE(kinds.size() == 7);
  CHECK(kinds[0] == Goal::Kind::Builtin);
  CHECK(kinds[1] == Goal::Kind::Builtin);
  CHECK(kinds[2] == Goal::Kind::Builtin);
  CHECK(kinds[3] == Goal::Kind::Builtin);
  CHECK(kinds[4] == Goal::Kind::True);
  CHECK(kinds[5] == Goal::Kind::Builtin);
  CHECK(kinds[6] == Goal::Kind::Atom);
  CHECK(is_builtin(Symbol("=<"), 2));
  CHECK_FALSE(is_builtin(Symbol("is"), 3));
}

TEST_CASE("proximity equations and directives") {
  Program p = parse_program(
      ":- lambda_cut(0.5).\n:- t_norm(product).\n:- transitivity(yes).\np ~ s = 0.6.\np(X) :- q(X).\n");
  REQUIRE(p.proximity.size() == 1);
  CHECK(p.proximity[0].left.name() == "p");
  CHECK(p.proximity[0].right.name() == "s");
  CHECK(p.proximity[0].degree == 0.6);
  CHECK(p.lambda_cut == 0.5);
  CHECK(p.tnorm == TNormKind::Product);
  CHECK(p.transitive == true);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_program("p :- q.\np :- (q.\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(parse_program("(q => r) :- p."), ParseError);
  CHECK_THROWS_AS(parse_program("p with 0."), ParseError);
  CHECK_THROWS_AS(parse_program("p with 1.5."), ParseError);
  CHECK_THROWS_AS(parse_program("a ~ b = 0."), ParseError);
  CHECK_THROWS_AS(parse_program(":- lambda_cut(2)."), ParseError);
  CHECK_THROWS_AS(parse_goal("p("), ParseError);
}

TEST_CASE("printer output") {
  Program p = parse_program("p(X, [a|T]) :- q(X) => r(f(X), -3, 2.5), s ; t with 0.75.\na ~ b = 0.5.");
  CHECK(format_program(p) == "a ~ b = 0.5.\np(X,[a|T]) :- q(X) => r(f(X),-3,2.5), s; t with 0.75.\n");
}

TEST_CASE("printing and parsing round-trip on generated programs") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.fuzzy = seed % 2 == 1;
    const Program p = gen_program(spec);
    const std::string text = format_program(p);
    INFO(text);
    CHECK(equivalent(parse_program(text), p));
  }
}

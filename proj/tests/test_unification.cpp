#include "support.hpp"

#include <algorithm>
#include <random>

#include "hypolog/parser.hpp"
#include "hypolog/printer.hpp"
#include "hypolog/unify.hpp"

using namespace hypolog;

namespace {

Term X() { return Term::var(0); }
Term Y() { return Term::var(1); }
Term a(std::string_view n) { return Term::atom(n); }
Term f(std::string_view n, std::vector<Term> args) { return Term::compound(n, std::move(args)); }

ProximityRelation relation(std::vector<ProximityEquation> eqs, TNorm t = {}, bool transitive = false) {
  return ProximityRelation::build(eqs, t, transitive);
}

ProximityEquation eq(std::string_view l, std::string_view r, double d) { return {Symbol(l), Symbol(r), d}; }

Term random_term(std::mt19937_64& rng, int depth) {
  const auto roll = rng() % 10;
  if (roll < 3) return Term::var(static_cast<int>(rng() % 3));
  if (roll < 6 || depth == 0) {
    static const char* names[] = {"a", "b", "c"};
    return a(names[rng() % 3]);
  }
  if (roll < 7) return Term::integer(static_cast<int64_t>(rng() % 2));
  std::vector<Term> args;
  const size_t n = 1 + rng() % 2;
  for (size_t i = 0; i < n; ++i) args.push_back(random_term(rng, depth - 1));
  return f(rng() % 2 ? "f" : "g", std::move(args));
}

}  // namespace

TEST_CASE("mgu") {
  auto s = mgu(f("p", {X(), a("a")}), f("p", {a("b"), Y()}));
  REQUIRE(s);
  CHECK(s->size() == 2);
  CHECK(s->at(0) == a("b"));
  CHECK(s->at(1) == a("a"));
  CHECK_FALSE(mgu(f("p", {a("a")}), f("p", {a("b")})));
}

TEST_CASE("occurs check is off by default") {
  auto s = mgu(X(), f("f", {X()}));
  REQUIRE(s);
  CHECK(s->at(0) == f("f", {X()}));
  CHECK_FALSE(mgu(X(), f("f", {X()}), true));
}

TEST_CASE("mgu results are idempotent") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Term l = random_term(rng, 3), r = random_term(rng, 3);
    auto s = mgu(l, r, true);
    if (!s) continue;
    CHECK(hypolog::apply(*s, l) == hypolog::apply(*s, r));
    for (const auto& [v, t] : *s) CHECK(hypolog::apply(*s, t) == t);
  }
}

TEST_CASE("restriction and composition") {
  Substitution s, t;
  s.emplace(0, Y());
  s.emplace(2, a("c"));
  t.emplace(1, a("b"));
  Substitution c = compose(s, t);
  CHECK(hypolog::apply(c, X()) == a("b"));
  CHECK(hypolog::apply(c, Y()) == a("b"));
  CHECK(restrict(c, {0}).size() == 1);
}

TEST_CASE("build relation") {
  const auto id = relation({});
  CHECK(id.is_identity());
  CHECK(id.degree(Symbol("x"), Symbol("x")) == 1.0);
  CHECK(id.degree(Symbol("x"), Symbol("y")) == 0.0);

  const auto r = relation({eq("p", "s", 0.6)});
  CHECK(r.degree(Symbol("p"), Symbol("s")) == 0.6);
  CHECK(r.degree(Symbol("s"), Symbol("p")) == 0.6);
  CHECK(r.degree(Symbol("p"), Symbol("p")) == 1.0);

  CHECK_THROWS_AS(relation({eq("a", "b", 0.5), eq("b", "a", 0.7)}), ProximityError);
  CHECK_NOTHROW(relation({eq("a", "b", 0.5), eq("b", "a", 0.5)}));
  CHECK_THROWS_AS(relation({eq("a", "b", 1.5)}), ProximityError);
  CHECK_THROWS_AS(relation({eq("a", "a", 0.5)}), ProximityError);
  try {
    relation({eq("a", "b", 0.5), eq("a", "b", 0.7)});
  } catch (const ProximityError& e) {
    CHECK(std::string(e.what()).find("a") != std::string::npos);
    CHECK(std::string(e.what()).find("b") != std::string::npos);
  }
}

// Closure oracle: repeat max-t composition over the full matrix until stable.
TEST_CASE("transitive closure matches brute-force iteration") {
  const auto r = relation({eq("a", "b", 0.8), eq("b", "c", 0.5)}, TNorm(TNormKind::Min), true);
  CHECK(r.degree(Symbol("a"), Symbol("c")) == 0.5);

  std::mt19937_64 rng(11);
  const double grades[] = {0.25, 0.5, 0.625, 0.75, 0.875, 1.0};
  for (int trial = 0; trial < 200; ++trial) {
    const TNorm t(static_cast<TNormKind>(trial % 3));
    const int n = 5;
    std::vector<Symbol> syms;
    for (int i = 0; i < n; ++i) syms.push_back(Symbol("s" + std::to_string(i)));
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    std::vector<ProximityEquation> eqs;
    for (int i = 0; i < n; ++i) m[i][i] = 1.0;
    for (int k = 0; k < 4; ++k) {
      const int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
      if (i == j || m[i][j] > 0) continue;
      const double d = grades[rng() % 6];
      m[i][j] = m[j][i] = d;
      eqs.push_back({syms[i], syms[j], d});
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const double v = t(m[i][k], m[k][j]);
            if (v > m[i][j]) {
              m[i][j] = v;
              changed = true;
            }
          }
    }
    const auto closed = relation(eqs, t, true);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(closed.degree(syms[i], syms[j]) == m[i][j]);
        CHECK(closed.degree(syms[i], syms[j]) == closed.degree(syms[j], syms[i]));
      }
    // Closing again changes nothing.
    std::vector<ProximityEquation> again;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m[i][j] > 0) again.push_back({syms[i], syms[j], m[i][j]});
    const auto twice = relation(again, t, true);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(twice.degree(syms[i], syms[j]) == m[i][j]);
  }
}

TEST_CASE("wmgu") {
  auto id = wmgu(f("p", {X()}), f("p", {a("a")}), relation({}), 0.0, TNorm());
  REQUIRE(id);
  CHECK(id->degree == 1.0);
  CHECK(id->subst.at(0) == a("a"));

  const auto r = relation({eq("a", "b", 0.7)});
  auto w = wmgu(a("a"), a("b"), r, 0.5, TNorm());
  REQUIRE(w);
  CHECK(w->subst.empty());
  CHECK(w->degree == 0.7);
  CHECK_FALSE(wmgu(a("a"), a("b"), r, 0.8, TNorm()));
  CHECK_FALSE(wmgu(a("a"), a("c"), r, 0.0, TNorm()));

  // Distinct arities never unify, even for related functors.
  const auto fg = relation({eq("f", "g", 0.9)});
  CHECK_FALSE(wmgu(f("f", {X()}), f("g", {X(), Y()}), fg, 0.0, TNorm()));
  auto nested = wmgu(f("f", {a("a"), X()}), f("g", {a("b"), a("c")}), relation({eq("f", "g", 0.9), eq("a", "b", 0.6)}),
                     0.0, TNorm(TNormKind::Product));
  REQUIRE(nested);
  CHECK(nested->degree == doctest::Approx(0.54));
  CHECK(nested->subst.at(0) == a("c"));
}

TEST_CASE("wmgu with the identity relation is mgu with degree 1") {
  std::mt19937_64 rng(3);
  const ProximityRelation id;
  for (int i = 0; i < 3000; ++i) {
    const Term l = random_term(rng, 3), r = random_term(rng, 3);
    const auto s = mgu(l, r, true);
    const auto w = wmgu(l, r, id, 0.0, TNorm(), true);
    REQUIRE(s.has_value() == w.has_value());
    if (!s) continue;
    CHECK(w->degree == 1.0);
    CHECK(hypolog::apply(w->subst, l) == hypolog::apply(w->subst, r));
    CHECK(hypolog::apply(*s, l) == hypolog::apply(w->subst, l));
  }
}

TEST_CASE("wmgu degree is the relation degree of the unified terms") {
  std::mt19937_64 rng(5);
  const auto r = relation({eq("a", "b", 0.75), eq("b", "c", 0.5), eq("f", "g", 0.875)});
  for (int i = 0; i < 3000; ++i) {
    const TNorm t(static_cast<TNormKind>(i % 3));
    const double lambda = (i % 4) * 0.25;
    const Term l = random_term(rng, 3), rt = random_term(rng, 3);
    const auto w = wmgu(l, rt, r, lambda, t, true);
    if (!w) continue;
    CHECK(w->degree >= lambda);
    CHECK(w->degree > 0.0);
    CHECK(w->degree == relation_degree(hypolog::apply(w->subst, l), hypolog::apply(w->subst, rt), r, t));
  }
}

TEST_CASE("degree composition") {
  const std::vector<double> d1{0.8, 1, 0.7, 0.9};
  CHECK(degree_comp(d1, TNorm(TNormKind::Min)) == 0.7);
  const std::vector<double> d2{0.8, 0.7, 0.9};
  CHECK(degree_comp(d2, TNorm(TNormKind::Product)) == doctest::Approx(0.504));
  CHECK(degree_comp({}, TNorm()) == 1.0);
  CHECK(degree_comp(d2, TNorm(TNormKind::Luka)) == doctest::Approx(0.4));
}

TEST_CASE("degree composition ignores order") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    std::vector<double> d;
    for (size_t k = 0, n = rng() % 6; k < n; ++k) d.push_back(static_cast<double>(rng() % 9) / 8.0);
    for (TNormKind kind : {TNormKind::Min, TNormKind::Product, TNormKind::Luka}) {
      const TNorm t(kind);
      const double base = degree_comp(d, t);
      auto shuffled = d;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(degree_comp(shuffled, t) == doctest::Approx(base).epsilon(1e-12));
    }
  }
}

TEST_CASE("t-norm laws on sampled values") {
  std::mt19937_64 rng(13);
  auto sample = [&] { return static_cast<double>(rng() % 17) / 16.0; };
  for (TNormKind kind : {TNormKind::Min, TNormKind::Product, TNormKind::Luka}) {
    const TNorm t(kind);
    for (int i = 0; i < 2000; ++i) {
      const double x = sample(), y = sample(), z = sample();
      CHECK(t(x, y) == t(y, x));
      CHECK(t(t(x, y), z) == doctest::Approx(t(x, t(y, z))).epsilon(1e-12));
      CHECK(t(x, 1.0) == x);
      if (x <= y) CHECK(t(x, z) <= t(y, z));
    }
  }
  CHECK(TNorm::parse("product").kind() == TNormKind::Product);
  CHECK(TNorm::parse("luka").kind() == TNormKind::Luka);
  CHECK_THROWS_AS(TNorm::parse("max"), std::invalid_argument);
}

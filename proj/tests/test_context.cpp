#include "support.hpp"

#include <algorithm>
#include <random>

#include "hypolog/context.hpp"

using namespace hypolog;

namespace {

using Seq = std::vector<int64_t>;

bool is_prefix(const Seq& a, const Seq& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// Random identifiers drawn from one growing tree so that tails are shared,
// mixed with identifiers rebuilt from plain sequences.
class Forest {
 public:
  explicit Forest(uint64_t seed) : rng_(seed) { pool_.push_back(ContextId()); }

  ContextId next() {
    const ContextId& base = pool_[rng_() % pool_.size()];
    ContextId c = rng_() % 4 == 0 ? base : base.extend(static_cast<int64_t>(rng_() % 5));
    if (pool_.size() < 64) pool_.push_back(c);
    if (rng_() % 3 == 0) c = ContextId::from_sequence(c.sequence());
    return c;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<ContextId> pool_;
};

}  // namespace

TEST_CASE("fresh indexes count from zero") {
  RegistrationStore s;
  CHECK(s.fresh_index() == 0);
  CHECK(s.fresh_index() == 1);
  for (int i = 2; i < 10; ++i) s.fresh_index();
  CHECK(s.issued() == 10);
  CHECK(s.fresh_index() == 10);
}

TEST_CASE("extend") {
  const ContextId e;
  CHECK(e.empty());
  CHECK(e.extend(0).sequence() == Seq{0});
  const ContextId c = e.extend(0).extend(1);
  CHECK(c.sequence() == Seq{0, 1});
  CHECK(c.reversed() == Seq{1, 0});
  CHECK(c.to_string() == "[1,0]");
  CHECK(c.extend(7).sequence() == Seq{0, 1, 7});
  CHECK(c.extend(7).size() == 3);
  CHECK(c.extend(7).parent() == c);
  CHECK(c.last() == 1);
  CHECK(ContextId::from_sequence({0, 1}) == c);
}

TEST_CASE("prefix check") {
  const ContextId e;
  const auto c01 = ContextId::from_sequence({0, 1});
  CHECK(prefix_check(e, e));
  CHECK(prefix_check(e, c01));
  CHECK(prefix_check(ContextId::from_sequence({0}), c01));
  CHECK_FALSE(prefix_check(ContextId::from_sequence({1}), c01));
  CHECK_FALSE(prefix_check(c01, ContextId::from_sequence({0})));
  CHECK(prefix_check(c01, c01));
}

TEST_CASE("prefix check agrees with sequence prefixes") {
  Forest forest(17);
  for (int i = 0; i < 20000; ++i) {
    const ContextId a = forest.next(), b = forest.next();
    CHECK(prefix_check(a, b) == is_prefix(a.sequence(), b.sequence()));
  }
}

TEST_CASE("registrations") {
  RegistrationStore s;
  CHECK(s.lookup(0).empty());
  s.register_rule(0, {{}, 0, ContextId::from_sequence({1})});
  REQUIRE(s.lookup(0).size() == 1);
  CHECK(s.lookup(0)[0].shared.empty());
  CHECK(s.lookup(0)[0].context.sequence() == Seq{1});

  s.register_rule(0, {{Term::atom("a")}, 0, ContextId::from_sequence({2})});
  s.register_rule(3, {{}, 0, ContextId()});
  REQUIRE(s.lookup(0).size() == 2);
  CHECK(s.lookup(0)[1].shared[0] == Term::atom("a"));
  CHECK(s.count(3) == 1);
  CHECK(s.size() == 3);

  const size_t mark = s.log_position();
  s.register_rule(0, {{}, 0, ContextId::from_sequence({4})});
  CHECK(s.count(0) == 3);
  s.trim(mark);
  CHECK(s.count(0) == 2);
  CHECK(s.size() == 3);
  s.clear();
  CHECK(s.size() == 0);
}

TEST_CASE("a registration is visible exactly from the contexts extending it") {
  Forest forest(29);
  for (int i = 0; i < 2000; ++i) {
    RegistrationStore s;
    const ContextId at = forest.next();
    s.register_rule(0, {{}, 0, at});
    for (int k = 0; k < 10; ++k) {
      const ContextId from = forest.next();
      const auto& entries = s.lookup(0);
      const bool visible = std::any_of(entries.begin(), entries.end(),
                                       [&](const auto& e) { return prefix_check(e.context, from); });
      CHECK(visible == is_prefix(at.sequence(), from.sequence()));
    }
  }
}

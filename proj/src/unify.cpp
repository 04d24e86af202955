#include "hypolog/unify.hpp"

#include <algorithm>

#include "hypolog/store.hpp"

namespace hypolog {

Term apply(const Substitution& s, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = s.find(t.var_id());
      return it == s.end() ? t : apply(s, it->second);
    }
    case Term::Kind::Compound: {
      std::vector<Term> args;
      args.reserve(t.arity());
      for (const Term& a : t.args()) args.push_back(apply(s, a));
      return Term::compound(t.functor(), std::move(args));
    }
    default: return t;
  }
}

Substitution restrict(const Substitution& s, const std::vector<int>& vars) {
  Substitution out;
  for (int v : vars)
    if (auto it = s.find(v); it != s.end()) out.emplace(v, it->second);
  return out;
}

Substitution compose(const Substitution& first, const Substitution& second) {
  Substitution out;
  for (const auto& [v, t] : first) {
    Term u = apply(second, t);
    if (!(u.is_var() && u.var_id() == v)) out.emplace(v, std::move(u));
  }
  for (const auto& [v, t] : second)
    if (!first.count(v)) out.emplace(v, t);
  return out;
}

namespace {

template <class UnifyFn>
auto solve_pair(const Term& a, const Term& b, UnifyFn&& fn) -> std::optional<std::pair<Substitution, double>> {
  const int n = std::max(a.max_var_id(), b.max_var_id()) + 1;
  rt::Store store;
  rt::Ref env = store.alloc_env(static_cast<size_t>(n));
  rt::Ref ra = store.put(a, env);
  rt::Ref rb = store.put(b, env);
  std::optional<double> degree = fn(store, ra, rb);
  if (!degree) return std::nullopt;
  rt::Reader reader(store, n);
  for (int i = 0; i < n; ++i) reader.name(env + static_cast<rt::Ref>(i), i);
  Substitution s;
  for (int i = 0; i < n; ++i) {
    rt::Ref cell = env + static_cast<rt::Ref>(i);
    if (store.deref(cell) == cell) continue;
    s.emplace(i, reader.read(cell));
  }
  return std::make_pair(std::move(s), *degree);
}

}  // namespace

std::optional<Substitution> mgu(const Term& a, const Term& b, bool occurs_check) {
  auto r = solve_pair(a, b, [&](rt::Store& st, rt::Ref x, rt::Ref y) -> std::optional<double> {
    if (!st.unify(x, y, occurs_check)) return std::nullopt;
    return 1.0;
  });
  if (!r) return std::nullopt;
  return std::move(r->first);
}

std::optional<Substitution> mgu(const Atom& a, const Atom& b, bool occurs_check) {
  return mgu(a.as_term(), b.as_term(), occurs_check);
}

std::optional<WeakUnifier> wmgu(const Term& a, const Term& b, const ProximityRelation& relation, double lambda,
                                TNorm tnorm, bool occurs_check) {
  rt::WeakParams params{&relation, lambda, tnorm};
  auto r = solve_pair(a, b, [&](rt::Store& st, rt::Ref x, rt::Ref y) {
    return st.weak_unify(x, y, params, occurs_check);
  });
  if (!r) return std::nullopt;
  return WeakUnifier{std::move(r->first), r->second};
}

std::optional<WeakUnifier> wmgu(const Atom& a, const Atom& b, const ProximityRelation& relation, double lambda,
                                TNorm tnorm, bool occurs_check) {
  return wmgu(a.as_term(), b.as_term(), relation, lambda, tnorm, occurs_check);
}

namespace {

bool degree_walk(const Term& a, const Term& b, const ProximityRelation& relation, TNorm tnorm, double& acc) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: return a.var_id() == b.var_id();
    case Term::Kind::Int: return a.int_value() == b.int_value();
    case Term::Kind::Float: return a.float_value() == b.float_value();
    case Term::Kind::Atom:
      if (a.functor() != b.functor()) acc = tnorm(acc, relation.degree(a.functor(), b.functor()));
      return true;
    case Term::Kind::Compound:
      if (a.arity() != b.arity()) return false;
      if (a.functor() != b.functor()) acc = tnorm(acc, relation.degree(a.functor(), b.functor()));
      for (size_t i = 0; i < a.arity(); ++i)
        if (!degree_walk(a.arg(i), b.arg(i), relation, tnorm, acc)) return false;
      return true;
  }
  return false;
}

}  // namespace

double relation_degree(const Term& a, const Term& b, const ProximityRelation& relation, TNorm tnorm) {
  double acc = 1.0;
  return degree_walk(a, b, relation, tnorm, acc) ? acc : 0.0;
}

}  // namespace hypolog

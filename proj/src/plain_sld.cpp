#include "hypolog/plain_sld.hpp"

#include <map>
#include <stdexcept>

#include "hypolog/engine.hpp"

namespace hypolog {

namespace {

Term shift(const Term& t, int offset) {
  switch (t.kind()) {
    case Term::Kind::Var: return Term::var(t.var_id() + offset);
    case Term::Kind::Compound: {
      std::vector<Term> args;
      for (const Term& a : t.args()) args.push_back(shift(a, offset));
      return Term::compound(t.functor(), std::move(args));
    }
    default: return t;
  }
}

struct Pending {
  const Goal* goal;
  int offset;
};

class Oracle {
 public:
  Oracle(const Program& program, const Query& query, std::optional<uint32_t> budget, uint64_t limit)
      : program_(program), query_(query), budget_(budget), limit_(limit), next_var_(query.num_vars) {}

  std::vector<Answer> run() {
    std::vector<Pending> goals{{query_.goal.get(), 0}};
    solve(goals, {}, 0);
    return std::move(answers_);
  }

 private:
  using Subst = std::map<int, Term>;

  Term walk(Term t, const Subst& s) const {
    while (t.is_var()) {
      auto it = s.find(t.var_id());
      if (it == s.end()) break;
      t = it->second;
    }
    return t;
  }

  Term resolve(const Term& t, const Subst& s) const {
    Term w = walk(t, s);
    if (w.kind() != Term::Kind::Compound) return w;
    std::vector<Term> args;
    for (const Term& a : w.args()) args.push_back(resolve(a, s));
    return Term::compound(w.functor(), std::move(args));
  }

  bool unify(const Term& a, const Term& b, Subst& s) const {
    Term x = walk(a, s), y = walk(b, s);
    if (x.is_var() && y.is_var() && x.var_id() == y.var_id()) return true;
    if (x.is_var()) {
      s[x.var_id()] = y;
      return true;
    }
    if (y.is_var()) {
      s[y.var_id()] = x;
      return true;
    }
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
      case Term::Kind::Atom: return x.functor() == y.functor();
      case Term::Kind::Int: return x.int_value() == y.int_value();
      case Term::Kind::Float: return x.float_value() == y.float_value();
      case Term::Kind::Compound:
        if (x.functor() != y.functor() || x.arity() != y.arity()) return false;
        for (size_t i = 0; i < x.arity(); ++i)
          if (!unify(x.arg(i), y.arg(i), s)) return false;
        return true;
      case Term::Kind::Var: break;
    }
    return false;
  }

  int64_t eval(const Term& t, const Subst& s) const {
    Term w = walk(t, s);
    if (w.kind() == Term::Kind::Int) return w.int_value();
    if (w.kind() == Term::Kind::Compound && w.arity() == 2) {
      int64_t a = eval(w.arg(0), s), b = eval(w.arg(1), s);
      const std::string& op = w.functor().name();
      if (op == "+") return a + b;
      if (op == "-") return a - b;
      if (op == "*") return a * b;
      if (op == "//" && b != 0) return a / b;
    }
    throw std::invalid_argument("unsupported arithmetic in oracle");
  }

  bool builtin(const Atom& a, int offset, Subst& s) const {
    const std::string& op = a.predicate.name();
    if (op == "true") return true;
    if (op == "fail") return false;
    Term l = shift(a.args[0], offset), r = shift(a.args[1], offset);
    if (op == "=") return unify(l, r, s);
    if (op == "\\=") {
      Subst copy = s;
      return !unify(l, r, copy);
    }
    if (op == "is") return unify(l, Term::integer(eval(r, s)), s);
    int64_t x = eval(l, s), y = eval(r, s);
    if (op == "<") return x < y;
    if (op == ">") return x > y;
    if (op == "=<") return x <= y;
    if (op == ">=") return x >= y;
    throw std::invalid_argument("unknown builtin in oracle");
  }

  void solve(std::vector<Pending> goals, const Subst& s, uint32_t depth) {
    if (++steps_ > limit_) throw BudgetExceeded("oracle step limit exceeded");
    if (goals.empty()) {
      Answer a;
      for (int i = 0; i < query_.num_vars; ++i) {
        const std::string& name = query_.var_names[static_cast<size_t>(i)];
        if (name.empty() || name[0] == '_') continue;
        a.bindings.emplace_back(name, resolve(Term::var(i), s));
      }
      answers_.push_back(std::move(a));
      return;
    }
    Pending first = goals.back();
    goals.pop_back();
    const Goal& g = *first.goal;
    switch (g.kind) {
      case Goal::Kind::True: solve(std::move(goals), s, depth); return;
      case Goal::Kind::Conj:
        goals.push_back({g.right.get(), first.offset});
        goals.push_back({g.left.get(), first.offset});
        solve(std::move(goals), s, depth);
        return;
      case Goal::Kind::Disj: {
        auto other = goals;
        goals.push_back({g.left.get(), first.offset});
        solve(std::move(goals), s, depth);
        other.push_back({g.right.get(), first.offset});
        solve(std::move(other), s, depth);
        return;
      }
      case Goal::Kind::Builtin: {
        Subst t = s;
        if (builtin(g.atom, first.offset, t)) solve(std::move(goals), t, depth);
        return;
      }
      case Goal::Kind::Implication: throw std::invalid_argument("plain SLD has no implications");
      case Goal::Kind::Atom: break;
    }
    for (const Clause& c : program_.clauses) {
      const Rule& r = *c.rule;
      if (r.head.predicate != g.atom.predicate || r.head.arity() != g.atom.arity()) continue;
      if (budget_ && depth >= *budget_) continue;
      const int offset = next_var_;
      next_var_ += c.num_vars;
      Subst t = s;
      bool ok = true;
      for (size_t i = 0; ok && i < r.head.arity(); ++i)
        ok = unify(shift(g.atom.args[i], first.offset), shift(r.head.args[i], offset), t);
      if (!ok) continue;
      auto next = goals;
      next.push_back({r.body.get(), offset});
      solve(std::move(next), t, depth + 1);
    }
  }

  const Program& program_;
  const Query& query_;
  std::optional<uint32_t> budget_;
  uint64_t limit_;
  uint64_t steps_ = 0;
  int next_var_;
  std::vector<Answer> answers_;
};

}  // namespace

std::vector<Answer> plain_sld(const Program& program, const Query& query, std::optional<uint32_t> depth_budget,
                              uint64_t step_limit) {
  return Oracle(program, query, depth_budget, step_limit).run();
}

}  // namespace hypolog

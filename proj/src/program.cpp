#include "hypolog/program.hpp"

#include <map>

namespace hypolog {

GoalPtr Goal::truth() {
  static const GoalPtr t = std::make_shared<const Goal>();
  return t;
}

GoalPtr Goal::call(Atom a) {
  auto g = std::make_shared<Goal>();
  g->kind = Kind::Atom;
  g->atom = std::move(a);
  return g;
}

GoalPtr Goal::builtin(Atom a) {
  auto g = std::make_shared<Goal>();
  g->kind = Kind::Builtin;
  g->atom = std::move(a);
  return g;
}

GoalPtr Goal::conj(GoalPtr l, GoalPtr r) {
  auto g = std::make_shared<Goal>();
  g->kind = Kind::Conj;
  g->left = std::move(l);
  g->right = std::move(r);
  return g;
}

GoalPtr Goal::disj(GoalPtr l, GoalPtr r) {
  auto g = std::make_shared<Goal>();
  g->kind = Kind::Disj;
  g->left = std::move(l);
  g->right = std::move(r);
  return g;
}

GoalPtr Goal::implication(RulePtr hyp, GoalPtr consequent) {
  auto g = std::make_shared<Goal>();
  g->kind = Kind::Implication;
  g->hypothesis = std::move(hyp);
  g->right = std::move(consequent);
  return g;
}

void Goal::collect_vars(std::vector<int>& out) const {
  switch (kind) {
    case Kind::True: break;
    case Kind::Atom:
    case Kind::Builtin:
      for (const auto& a : atom.args) a.collect_vars(out);
      break;
    case Kind::Conj:
    case Kind::Disj:
      left->collect_vars(out);
      right->collect_vars(out);
      break;
    case Kind::Implication:
      hypothesis->collect_vars(out);
      right->collect_vars(out);
      break;
  }
}

void Rule::collect_vars(std::vector<int>& out) const {
  for (const auto& a : head.args) a.collect_vars(out);
  body->collect_vars(out);
}

bool operator==(const Goal& a, const Goal& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Goal::Kind::True: return true;
    case Goal::Kind::Atom:
    case Goal::Kind::Builtin: return a.atom == b.atom;
    case Goal::Kind::Conj:
    case Goal::Kind::Disj: return *a.left == *b.left && *a.right == *b.right;
    case Goal::Kind::Implication: return *a.hypothesis == *b.hypothesis && *a.right == *b.right;
  }
  return false;
}

bool operator==(const Rule& a, const Rule& b) {
  return a.grade == b.grade && a.head == b.head && *a.body == *b.body;
}

namespace {

// Renumbers variables of a clause in first-occurrence order.
Rule canonical(const Clause& c) {
  std::vector<int> order;
  c.rule->collect_vars(order);
  std::vector<int> map(static_cast<size_t>(std::max(c.num_vars, 1)), -1);
  for (size_t i = 0; i < order.size(); ++i) {
    if (static_cast<size_t>(order[i]) >= map.size()) map.resize(static_cast<size_t>(order[i]) + 1, -1);
    map[static_cast<size_t>(order[i])] = static_cast<int>(i);
  }
  struct Renamer {
    const std::vector<int>& map;
    Atom atom(const Atom& a) const {
      Atom out{a.predicate, {}};
      for (const auto& t : a.args) out.args.push_back(t.rename(map));
      return out;
    }
    GoalPtr goal(const GoalPtr& g) const {
      switch (g->kind) {
        case Goal::Kind::True: return g;
        case Goal::Kind::Atom: return Goal::call(atom(g->atom));
        case Goal::Kind::Builtin: return Goal::builtin(atom(g->atom));
        case Goal::Kind::Conj: return Goal::conj(goal(g->left), goal(g->right));
        case Goal::Kind::Disj: return Goal::disj(goal(g->left), goal(g->right));
        case Goal::Kind::Implication: {
          auto r = std::make_shared<Rule>(rule(*g->hypothesis));
          return Goal::implication(std::move(r), goal(g->right));
        }
      }
      return g;
    }
    Rule rule(const Rule& r) const { return Rule{atom(r.head), goal(r.body), r.grade}; }
  };
  return Renamer{map}.rule(*c.rule);
}

}  // namespace

bool equivalent(const Program& a, const Program& b) {
  if (a.clauses.size() != b.clauses.size()) return false;
  for (size_t i = 0; i < a.clauses.size(); ++i)
    if (!(canonical(a.clauses[i]) == canonical(b.clauses[i]))) return false;
  return a.proximity == b.proximity && a.lambda_cut == b.lambda_cut && a.tnorm == b.tnorm &&
         a.transitive == b.transitive;
}

}  // namespace hypolog

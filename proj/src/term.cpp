#include "hypolog/term.hpp"

#include <algorithm>
#include <cassert>

namespace hypolog {

const Symbol kNil("[]");
const Symbol kCons("[|]");
const Symbol kComma(",");

struct Term::Node {
  Kind kind;
  int var = 0;
  Symbol sym;
  int64_t i = 0;
  double f = 0.0;
  std::vector<Term> args;
};

Term::Term() : Term(atom(Symbol("[]"))) {}

Term Term::var(int id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = id;
  return Term(std::move(n));
}

Term Term::atom(Symbol name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->sym = name;
  return Term(std::move(n));
}

Term Term::integer(int64_t value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Int;
  n->i = value;
  return Term(std::move(n));
}

Term Term::real(double value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Float;
  n->f = value;
  return Term(std::move(n));
}

Term Term::compound(Symbol functor, std::vector<Term> args) {
  if (args.empty()) return atom(functor);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compound;
  n->sym = functor;
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::list(const std::vector<Term>& items, Term tail) {
  Term out = std::move(tail);
  for (auto it = items.rbegin(); it != items.rend(); ++it) out = compound(kCons, {*it, out});
  return out;
}

Term::Kind Term::kind() const { return node_->kind; }
int Term::var_id() const { return node_->var; }
Symbol Term::functor() const { return node_->sym; }
int64_t Term::int_value() const { return node_->i; }
double Term::float_value() const { return node_->f; }
size_t Term::arity() const { return node_->args.size(); }
const Term& Term::arg(size_t i) const { return node_->args[i]; }
const std::vector<Term>& Term::args() const { return node_->args; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: return a.var_id() == b.var_id();
    case Term::Kind::Atom: return a.functor() == b.functor();
    case Term::Kind::Int: return a.int_value() == b.int_value();
    case Term::Kind::Float: return a.float_value() == b.float_value();
    case Term::Kind::Compound: return a.functor() == b.functor() && a.args() == b.args();
  }
  return false;
}

void Term::collect_vars(std::vector<int>& out) const {
  switch (kind()) {
    case Kind::Var:
      if (std::find(out.begin(), out.end(), var_id()) == out.end()) out.push_back(var_id());
      break;
    case Kind::Compound:
      for (const auto& a : args()) a.collect_vars(out);
      break;
    default: break;
  }
}

int Term::max_var_id() const {
  switch (kind()) {
    case Kind::Var: return var_id();
    case Kind::Compound: {
      int m = -1;
      for (const auto& a : args()) m = std::max(m, a.max_var_id());
      return m;
    }
    default: return -1;
  }
}

Term Term::rename(const std::vector<int>& map) const {
  switch (kind()) {
    case Kind::Var: return var(map.at(static_cast<size_t>(var_id())));
    case Kind::Compound: {
      std::vector<Term> out;
      out.reserve(arity());
      for (const auto& a : args()) out.push_back(a.rename(map));
      return compound(functor(), std::move(out));
    }
    default: return *this;
  }
}

Term Atom::as_term() const { return Term::compound(predicate, args); }

}  // namespace hypolog

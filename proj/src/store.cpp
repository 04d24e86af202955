#include "hypolog/store.hpp"

namespace hypolog::rt {

Store::Store() { cells_.reserve(1024); }

Ref Store::push(const Cell& c) {
  cells_.push_back(c);
  return static_cast<Ref>(cells_.size() - 1);
}

Ref Store::alloc_env(size_t n) {
  Ref base = static_cast<Ref>(cells_.size());
  cells_.resize(cells_.size() + n);
  for (size_t i = 0; i < n; ++i) {
    Cell& c = cells_[base + i];
    c.tag = Cell::Tag::Var;
    c.ref = base + static_cast<Ref>(i);
  }
  return base;
}

void Store::fill(Ref slot, const Term& t, Ref env) {
  Cell c;
  switch (t.kind()) {
    case Term::Kind::Var:
      c.tag = Cell::Tag::Var;
      c.ref = env + static_cast<Ref>(t.var_id());
      break;
    case Term::Kind::Atom:
      c.tag = Cell::Tag::Atom;
      c.sym = t.functor().id();
      break;
    case Term::Kind::Int:
      c.tag = Cell::Tag::Int;
      c.ival = t.int_value();
      break;
    case Term::Kind::Float:
      c.tag = Cell::Tag::Float;
      c.fval = t.float_value();
      break;
    case Term::Kind::Compound: {
      const size_t n = t.arity();
      Ref start = static_cast<Ref>(cells_.size());
      cells_.resize(cells_.size() + n);
      c.tag = Cell::Tag::Struct;
      c.sym = t.functor().id();
      c.arity = static_cast<uint32_t>(n);
      c.args = start;
      cells_[slot] = c;
      for (size_t i = 0; i < n; ++i) fill(start + static_cast<Ref>(i), t.arg(i), env);
      return;
    }
  }
  cells_[slot] = c;
}

Ref Store::put(const Term& t, Ref env) {
  if (t.is_var()) return env + static_cast<Ref>(t.var_id());
  Ref slot = push(Cell{});
  fill(slot, t, env);
  return slot;
}

Ref Store::deref(Ref r) const {
  for (;;) {
    const Cell& c = cells_[r];
    if (c.tag != Cell::Tag::Var || c.ref == r) return r;
    r = c.ref;
  }
}

void Store::bind(Ref var, Ref value) {
  cells_[var].ref = value;
  trail_.push_back(var);
}

void Store::undo(const Mark& m) {
  while (trail_.size() > m.trail) {
    Ref v = trail_.back();
    trail_.pop_back();
    cells_[v].ref = v;
  }
  cells_.resize(m.cells);
}

void Store::clear() {
  cells_.clear();
  trail_.clear();
}

bool Store::occurs(Ref var, Ref t) const {
  std::vector<Ref> stack{t};
  while (!stack.empty()) {
    Ref r = deref(stack.back());
    stack.pop_back();
    if (r == var) return true;
    const Cell& c = cells_[r];
    if (c.tag == Cell::Tag::Struct)
      for (uint32_t i = 0; i < c.arity; ++i) stack.push_back(c.args + i);
  }
  return false;
}

bool Store::unify(Ref a, Ref b, bool occurs_check) {
  work_.clear();
  work_.emplace_back(a, b);
  while (!work_.empty()) {
    auto [x, y] = work_.back();
    work_.pop_back();
    x = deref(x);
    y = deref(y);
    if (x == y) continue;
    const Cell& cx = cells_[x];
    const Cell& cy = cells_[y];
    if (cx.tag == Cell::Tag::Var && cy.tag == Cell::Tag::Var) {
      if (x < y) bind(y, x);
      else bind(x, y);
      continue;
    }
    if (cx.tag == Cell::Tag::Var) {
      if (occurs_check && occurs(x, y)) return false;
      bind(x, y);
      continue;
    }
    if (cy.tag == Cell::Tag::Var) {
      if (occurs_check && occurs(y, x)) return false;
      bind(y, x);
      continue;
    }
    if (cx.tag != cy.tag) return false;
    switch (cx.tag) {
      case Cell::Tag::Atom:
        if (cx.sym != cy.sym) return false;
        break;
      case Cell::Tag::Int:
        if (cx.ival != cy.ival) return false;
        break;
      case Cell::Tag::Float:
        if (cx.fval != cy.fval) return false;
        break;
      case Cell::Tag::Struct:
        if (cx.sym != cy.sym || cx.arity != cy.arity) return false;
        for (uint32_t i = cx.arity; i-- > 0;) work_.emplace_back(cx.args + i, cy.args + i);
        break;
      case Cell::Tag::Var: break;
    }
  }
  return true;
}

std::optional<double> Store::weak_unify(Ref a, Ref b, const WeakParams& params, bool occurs_check) {
  double degree = 1.0;
  auto compose = [&](Symbol f, Symbol g) {
    if (f == g) return true;
    double r = params.relation ? params.relation->degree(f, g) : 0.0;
    degree = params.tnorm(degree, r);
    return degree > 0.0 && degree >= params.lambda;
  };
  work_.clear();
  work_.emplace_back(a, b);
  while (!work_.empty()) {
    auto [x, y] = work_.back();
    work_.pop_back();
    x = deref(x);
    y = deref(y);
    if (x == y) continue;
    const Cell& cx = cells_[x];
    const Cell& cy = cells_[y];
    if (cx.tag == Cell::Tag::Var && cy.tag == Cell::Tag::Var) {
      if (x < y) bind(y, x);
      else bind(x, y);
      continue;
    }
    if (cx.tag == Cell::Tag::Var) {
      if (occurs_check && occurs(x, y)) return std::nullopt;
      bind(x, y);
      continue;
    }
    if (cy.tag == Cell::Tag::Var) {
      if (occurs_check && occurs(y, x)) return std::nullopt;
      bind(y, x);
      continue;
    }
    if (cx.tag != cy.tag) return std::nullopt;
    switch (cx.tag) {
      case Cell::Tag::Atom:
        if (!compose(Symbol::from_id(cx.sym), Symbol::from_id(cy.sym))) return std::nullopt;
        break;
      case Cell::Tag::Int:
        if (cx.ival != cy.ival) return std::nullopt;
        break;
      case Cell::Tag::Float:
        if (cx.fval != cy.fval) return std::nullopt;
        break;
      case Cell::Tag::Struct: {
        if (cx.arity != cy.arity) return std::nullopt;
        if (!compose(Symbol::from_id(cx.sym), Symbol::from_id(cy.sym))) return std::nullopt;
        Ref xa = cx.args, ya = cy.args;
        for (uint32_t i = cx.arity; i-- > 0;) work_.emplace_back(xa + i, ya + i);
        break;
      }
      case Cell::Tag::Var: break;
    }
  }
  if (degree <= 0.0 || degree < params.lambda) return std::nullopt;
  return degree;
}

void Reader::name(Ref r, int id) { ids_[r] = id; }

Term Reader::read(Ref r) {
  const Cell& c = store_.cell(r);
  switch (c.tag) {
    case Cell::Tag::Var: {
      if (c.ref == r) {
        auto [it, fresh] = ids_.emplace(r, next_);
        if (fresh) ++next_;
        return Term::var(it->second);
      }
      // A bound variable reached again while reading its own value closes a
      // cycle; it is shown as a variable.
      if (!active_.insert(r).second) {
        auto [it, fresh] = ids_.emplace(r, next_);
        if (fresh) ++next_;
        return Term::var(it->second);
      }
      Term t = read(c.ref);
      active_.erase(r);
      return t;
    }
    case Cell::Tag::Atom: return Term::atom(Symbol::from_id(c.sym));
    case Cell::Tag::Int: return Term::integer(c.ival);
    case Cell::Tag::Float: return Term::real(c.fval);
    case Cell::Tag::Struct: {
      std::vector<Term> args;
      args.reserve(c.arity);
      Ref start = c.args;
      uint32_t n = c.arity;
      Symbol f = Symbol::from_id(c.sym);
      for (uint32_t i = 0; i < n; ++i) args.push_back(read(start + i));
      return Term::compound(f, std::move(args));
    }
  }
  return Term();
}

}  // namespace hypolog::rt

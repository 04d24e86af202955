#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hypolog/proximity.hpp"
#include "hypolog/term.hpp"
#include "hypolog/tnorm.hpp"

namespace hypolog::rt {

using Ref = uint32_t;

/// One heap cell. An unbound variable is a Var cell that refers to itself.
/// A Struct cell's arguments occupy `arity` consecutive cells from `args`.
struct Cell {
  enum class Tag : uint8_t { Var, Atom, Int, Float, Struct };
  Tag tag = Tag::Var;
  uint32_t arity = 0;
  union {
    Ref ref;
    uint32_t sym;
    int64_t ival;
    double fval;
  };
  Ref args = 0;

  Cell() : ref(0) {}
};

struct Mark {
  size_t cells = 0;
  size_t trail = 0;
};

/// Parameters of weak unification.
struct WeakParams {
  const ProximityRelation* relation = nullptr;
  double lambda = 0.0;
  TNorm tnorm;
};

/// Term heap with a binding trail. Bindings and cells created after a mark
/// are discarded by undo(mark).
class Store {
 public:
  Store();

  /// Pushes `n` fresh unbound variables and returns the first.
  Ref alloc_env(size_t n);
  /// Builds `t` on the heap; variable `i` of `t` is the cell `env + i`.
  Ref put(const Term& t, Ref env);

  Ref deref(Ref r) const;
  const Cell& cell(Ref r) const { return cells_[r]; }
  bool unbound(Ref r) const {
    Ref d = deref(r);
    return cells_[d].tag == Cell::Tag::Var;
  }
  /// Argument `i` of the (dereferenced) struct at `r`.
  Ref arg(Ref r, size_t i) const { return cells_[deref(r)].args + static_cast<Ref>(i); }
  Symbol functor(Ref r) const { return Symbol::from_id(cells_[deref(r)].sym); }

  void bind(Ref var, Ref value);

  /// Syntactic unification. On failure partial bindings remain; the caller
  /// undoes them through a mark.
  bool unify(Ref a, Ref b, bool occurs_check = false);
  /// Similarity-based unification. Returns the accumulated degree, or
  /// nothing if it drops to zero or below the cut.
  std::optional<double> weak_unify(Ref a, Ref b, const WeakParams& params, bool occurs_check = false);

  Mark mark() const { return {cells_.size(), trail_.size()}; }
  void undo(const Mark& m);
  size_t heap_size() const { return cells_.size(); }
  void clear();

 private:
  bool occurs(Ref var, Ref t) const;
  Ref push(const Cell& c);
  void fill(Ref slot, const Term& t, Ref env);

  std::vector<Cell> cells_;
  std::vector<Ref> trail_;
  std::vector<std::pair<Ref, Ref>> work_;
};

/// Reads heap terms back as syntax terms. Each distinct unbound variable gets
/// the next id, consistently across calls on the same reader.
class Reader {
 public:
  explicit Reader(const Store& store, int first_id = 0) : store_(store), next_(first_id) {}

  Term read(Ref r);
  /// Pre-assigns `id` to the variable cell `r`.
  void name(Ref r, int id);
  int next_id() const { return next_; }

 private:
  const Store& store_;
  std::unordered_map<Ref, int> ids_;
  std::unordered_set<Ref> active_;
  int next_;
};

}  // namespace hypolog::rt

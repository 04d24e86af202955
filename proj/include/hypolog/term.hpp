#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hypolog/symbol.hpp"

namespace hypolog {

/// Immutable first-order term.
///
/// Variables are numbered per clause (or per query); two occurrences of the
/// same number inside one clause denote the same variable. Copies share
/// structure.
class Term {
 public:
  enum class Kind : uint8_t { Var, Atom, Int, Float, Compound };

  Term();  // the atom '[]'

  static Term var(int id);
  static Term atom(Symbol name);
  static Term atom(std::string_view name) { return atom(Symbol(name)); }
  static Term integer(int64_t value);
  static Term real(double value);
  static Term compound(Symbol functor, std::vector<Term> args);
  static Term compound(std::string_view functor, std::vector<Term> args) {
    return compound(Symbol(functor), std::move(args));
  }
  /// Builds a Prolog list `[items... | tail]`.
  static Term list(const std::vector<Term>& items, Term tail = Term());

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_atomic() const { return kind() == Kind::Atom || kind() == Kind::Int || kind() == Kind::Float; }

  int var_id() const;
  /// Atom name or compound functor.
  Symbol functor() const;
  int64_t int_value() const;
  double float_value() const;
  size_t arity() const;
  const Term& arg(size_t i) const;
  const std::vector<Term>& args() const;

  /// Structural equality (variables compared by id).
  friend bool operator==(const Term& a, const Term& b);

  /// Appends variable ids in first-occurrence order, skipping ones already present.
  void collect_vars(std::vector<int>& out) const;
  int max_var_id() const;
  /// Rewrites every variable id through `map`.
  Term rename(const std::vector<int>& map) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A predicate applied to arguments; the head of a rule or a call in a body.
struct Atom {
  Symbol predicate;
  std::vector<Term> args;

  size_t arity() const { return args.size(); }
  Term as_term() const;
  friend bool operator==(const Atom&, const Atom&) = default;
};

extern const Symbol kNil;    // []
extern const Symbol kCons;   // '[|]'
extern const Symbol kComma;  // ','

}  // namespace hypolog

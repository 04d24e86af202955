#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hypolog/proximity.hpp"
#include "hypolog/term.hpp"
#include "hypolog/tnorm.hpp"

namespace hypolog {

/// Finite map from variable ids to terms. Results of mgu and wmgu are
/// idempotent: no bound variable occurs in any range term.
using Substitution = std::map<int, Term>;

Term apply(const Substitution& s, const Term& t);
/// Keeps only the bindings of `vars`.
Substitution restrict(const Substitution& s, const std::vector<int>& vars);
/// The substitution that applies `first`, then `second`.
Substitution compose(const Substitution& first, const Substitution& second);

std::optional<Substitution> mgu(const Term& a, const Term& b, bool occurs_check = false);
std::optional<Substitution> mgu(const Atom& a, const Atom& b, bool occurs_check = false);

struct WeakUnifier {
  Substitution subst;
  double degree = 1.0;
};

/// Weak most general unifier under `relation` with cut `lambda`.
std::optional<WeakUnifier> wmgu(const Term& a, const Term& b, const ProximityRelation& relation, double lambda,
                                TNorm tnorm, bool occurs_check = false);
std::optional<WeakUnifier> wmgu(const Atom& a, const Atom& b, const ProximityRelation& relation, double lambda,
                                TNorm tnorm, bool occurs_check = false);

/// Proximity degree of two terms read position by position: symbols through
/// `relation`, variables only with themselves, numbers only with equal
/// numbers. 0 when the shapes differ.
double relation_degree(const Term& a, const Term& b, const ProximityRelation& relation, TNorm tnorm);

}  // namespace hypolog

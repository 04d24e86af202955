#pragma once

#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypolog/program.hpp"
#include "hypolog/tnorm.hpp"

namespace hypolog {

class ProximityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reflexive, symmetric fuzzy relation over symbols.
///
/// Immutable once built. Symbols that are never mentioned are related only
/// to themselves.
class ProximityRelation {
 public:
  using Neighbor = std::pair<Symbol, double>;

  ProximityRelation() = default;  // identity

  /// Throws ProximityError on a degree outside (0,1] or on two equations for
  /// the same pair with different degrees. With `transitive`, the result is
  /// closed under max-t-norm composition.
  static ProximityRelation build(const std::vector<ProximityEquation>& equations, TNorm tnorm, bool transitive);

  double degree(Symbol a, Symbol b) const;

  /// Symbols related to `s` with a nonzero degree, excluding `s` itself, in
  /// order of first mention.
  const std::vector<Neighbor>& neighbors(Symbol s) const;

  bool is_identity() const { return table_.empty(); }
  /// Mentioned symbols in order of first mention.
  const std::vector<Symbol>& symbols() const { return symbols_; }
  /// Number of unordered non-reflexive pairs.
  size_t pair_count() const { return table_.size() / 2; }

 private:
  static uint64_t key(Symbol a, Symbol b) { return (uint64_t{a.id()} << 32) | b.id(); }
  void set(Symbol a, Symbol b, double d);
  void rebuild_neighbors();

  std::unordered_map<uint64_t, double> table_;
  std::unordered_map<Symbol, std::vector<Neighbor>> neighbors_;
  std::vector<Symbol> symbols_;
};

}  // namespace hypolog

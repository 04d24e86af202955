#include "hypolog/proximity.hpp"

#include <algorithm>

#include "hypolog/printer.hpp"

namespace hypolog {

void ProximityRelation::set(Symbol a, Symbol b, double d) {
  table_[key(a, b)] = d;
  table_[key(b, a)] = d;
}

ProximityRelation ProximityRelation::build(const std::vector<ProximityEquation>& equations, TNorm tnorm,
                                           bool transitive) {
  ProximityRelation rel;
  std::unordered_map<Symbol, size_t> index;
  auto mention = [&](Symbol s) {
    if (index.emplace(s, rel.symbols_.size()).second) rel.symbols_.push_back(s);
  };
  for (const auto& eq : equations) {
    auto pair_name = [&] { return format_atom_name(eq.left) + " ~ " + format_atom_name(eq.right); };
    if (!(eq.degree > 0.0 && eq.degree <= 1.0))
      throw ProximityError("degree of " + pair_name() + " must lie in (0,1]");
    if (eq.left == eq.right) {
      if (eq.degree != 1.0) throw ProximityError("reflexive pair " + pair_name() + " must have degree 1");
      continue;
    }
    mention(eq.left);
    mention(eq.right);
    auto it = rel.table_.find(key(eq.left, eq.right));
    if (it != rel.table_.end()) {
      if (it->second != eq.degree)
        throw ProximityError("conflicting degrees for " + pair_name() + ": " + format_number(it->second, false) +
                             " and " + format_number(eq.degree, false));
      continue;
    }
    rel.set(eq.left, eq.right, eq.degree);
  }

  if (transitive && !rel.symbols_.empty()) {
    const size_t n = rel.symbols_.size();
    std::vector<double> m(n * n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      m[i * n + i] = 1.0;
      for (size_t j = 0; j < n; ++j)
        if (i != j) m[i * n + j] = rel.degree(rel.symbols_[i], rel.symbols_[j]);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          double best = m[i * n + j];
          for (size_t k = 0; k < n; ++k) best = std::max(best, tnorm(m[i * n + k], m[k * n + j]));
          if (best > m[i * n + j]) {
            m[i * n + j] = best;
            changed = true;
          }
        }
    }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (m[i * n + j] > 0.0) rel.set(rel.symbols_[i], rel.symbols_[j], m[i * n + j]);
  }
  rel.rebuild_neighbors();
  return rel;
}

void ProximityRelation::rebuild_neighbors() {
  neighbors_.clear();
  for (Symbol a : symbols_) {
    auto& list = neighbors_[a];
    for (Symbol b : symbols_) {
      if (a == b) continue;
      auto it = table_.find(key(a, b));
      if (it != table_.end() && it->second > 0.0) list.emplace_back(b, it->second);
    }
  }
}

double ProximityRelation::degree(Symbol a, Symbol b) const {
  if (a == b) return 1.0;
  auto it = table_.find(key(a, b));
  return it == table_.end() ? 0.0 : it->second;
}

const std::vector<ProximityRelation::Neighbor>& ProximityRelation::neighbors(Symbol s) const {
  static const std::vector<Neighbor> none;
  auto it = neighbors_.find(s);
  return it == neighbors_.end() ? none : it->second;
}

}  // namespace hypolog

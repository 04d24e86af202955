#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypolog/program.hpp"
#include "hypolog/store.hpp"

namespace hypolog {

/// Bindings of the reported goal variables plus the approximation degree.
struct Answer {
  std::vector<std::pair<std::string, Term>> bindings;
  double degree = 1.0;

  /// Binding text with unbound variables renamed _G0, _G1, ... in order of
  /// first occurrence; equal for answers that differ only in variable names.
  std::string canonical() const;
  /// "X = a, Y = b with degree 0.6", or "true with degree 1".
  std::string to_string() const;
};

/// Reads the answer for `query` whose variable `i` lives at `env + i`.
/// Variables named with a leading underscore are left out.
Answer read_answer(const rt::Store& store, rt::Ref env, const Query& query, double degree);

/// Multiset equality on (canonical bindings, degree within `tolerance`).
bool same_answers(const std::vector<Answer>& a, const std::vector<Answer>& b, double tolerance = 1e-9);
/// True if every answer of `sub` can be matched to a distinct answer of `super`.
bool sub_multiset(const std::vector<Answer>& sub, const std::vector<Answer>& super, double tolerance = 1e-9);

std::string format_answers(const std::vector<Answer>& answers);

}  // namespace hypolog

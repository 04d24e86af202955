#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hypolog/translate.hpp"

namespace hypolog {

enum class EmitDialect {
  CrispProp,  // run-time assertion of hypotheses, propositional programs
  CrispPred,  // run-time assertion of hypotheses, predicate programs
  Crisp,      // precompiled hypotheses with registrations
  Fuzzy,      // expanded clauses with degrees
};

std::optional<EmitDialect> parse_emit_dialect(std::string_view name);

/// Prolog text of a translated program, one clause per line. Variables are
/// named A, B, ... by first occurrence; singletons print as `_`.
std::string emit_prolog(const TranslatedProgram& program);

/// Prolog text in any dialect, translating `program` as needed.
std::string emit_prolog(const Program& program, const ProximityRelation& relation, double lambda,
                        EmitDialect dialect);

/// Runtime support (chk/2, reg/3, the implication clause, degree helpers)
/// needed to load emitted text into a standard Prolog.
std::string emit_prelude(EmitDialect dialect);

/// Compares two Prolog listings ignoring whitespace and variable names
/// (variables are renamed per clause by first occurrence; `_` is kept).
bool same_listing(std::string_view a, std::string_view b);
std::string normalize_listing(std::string_view text);

}  // namespace hypolog

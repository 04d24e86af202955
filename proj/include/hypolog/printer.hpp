#pragma once

#include <functional>
#include <string>

#include "hypolog/program.hpp"

namespace hypolog {

/// Names a variable by id when printing.
using VarNamer = std::function<std::string(int)>;

/// Shortest decimal that reads back to the same double. With `keep_float`
/// an integral value still prints with a fractional part ("1.0").
std::string format_number(double v, bool keep_float = true);

/// Writes a term with standard operator syntax (`:-`, `;`, `=>`, `,`,
/// comparisons, `+ - * //`) and list notation. The functor `'$paren'/1`
/// prints its argument wrapped in parentheses.
std::string format_term(const Term& t, const VarNamer& namer);

std::string format_atom_name(Symbol s);
std::string format_goal(const Goal& g, const VarNamer& namer);
std::string format_rule(const Rule& r, const VarNamer& namer);
std::string format_clause(const Clause& c);
std::string format_query(const Query& q);

/// Program text in the concrete syntax accepted by parse_program.
std::string format_program(const Program& p);

}  // namespace hypolog

#pragma once

#include <stdexcept>
#include <string>

#include "hypolog/store.hpp"

namespace hypolog {

/// Raised by a builtin that cannot be evaluated, such as arithmetic on an
/// unbound variable. It aborts the query rather than failing the branch.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Executes builtin `name` whose arguments are the cells `args[0..n)`.
/// Returns false on failure; bindings made on failure are left for the
/// caller to undo.
bool run_builtin(rt::Store& store, Symbol name, const rt::Ref* args, size_t n);

}  // namespace hypolog

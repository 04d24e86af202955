#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hypolog/program.hpp"

namespace hypolog {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses a program file: rules, proximity equations and directives.
///
/// Throws ParseError on syntax errors, implications in head position and
/// grades or proximity degrees outside (0,1].
Program parse_program(std::string_view text);

/// Parses a goal with the body grammar; the terminating '.' is optional.
Query parse_goal(std::string_view text);

/// True for the fixed builtin table (true, fail, =, \=, is, <, >, =<, >=).
bool is_builtin(Symbol name, size_t arity);

}  // namespace hypolog

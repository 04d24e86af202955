#pragma once

#include <doctest.h>

#include "hypolog/printer.hpp"

namespace doctest {
template <>
struct StringMaker<hypolog::Term> {
  static String convert(const hypolog::Term& t) {
    return hypolog::format_term(t, [](int id) { return "_" + std::to_string(id); }).c_str();
  }
};
}  // namespace doctest

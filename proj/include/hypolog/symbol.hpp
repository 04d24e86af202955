#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace hypolog {

/// Interned name of a predicate, functor or constant.
///
/// Interning is process-wide and thread-safe; ids are dense and handed out
/// in order of first interning.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name);

  static Symbol from_id(uint32_t id) {
    Symbol s;
    s.id_ = id;
    return s;
  }

  uint32_t id() const { return id_; }
  const std::string& name() const;

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend auto operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

 private:
  uint32_t id_ = 0;  // 0 is the empty name
};

}  // namespace hypolog

template <>
struct std::hash<hypolog::Symbol> {
  size_t operator()(hypolog::Symbol s) const noexcept { return s.id(); }
};

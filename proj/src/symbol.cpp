#include "hypolog/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace hypolog {
namespace {

struct SymbolTable {
  std::shared_mutex mutex;
  std::deque<std::string> names{std::string()};
  std::unordered_map<std::string_view, uint32_t> ids{{std::string_view(names.front()), 0}};
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
  auto& t = table();
  {
    std::shared_lock lock(t.mutex);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) {
      id_ = it->second;
      return;
    }
  }
  std::unique_lock lock(t.mutex);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) {
    id_ = it->second;
    return;
  }
  // deque keeps element addresses stable, so the string_view keys stay valid
  t.names.emplace_back(name);
  id_ = static_cast<uint32_t>(t.names.size() - 1);
  t.ids.emplace(std::string_view(t.names.back()), id_);
}

const std::string& Symbol::name() const {
  auto& t = table();
  std::shared_lock lock(t.mutex);
  return t.names[id_];
}

}  // namespace hypolog

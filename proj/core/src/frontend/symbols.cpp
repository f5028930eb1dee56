#include "gradual/frontend/symbols.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace gradual {
namespace {

struct SymbolTable {
  std::mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string_view, Symbol> ids;
};

SymbolTable& table() {
  static SymbolTable instance;
  return instance;
}

}  // namespace

Symbol intern(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  if (auto it = t.ids.find(name); it != t.ids.end()) return it->second;
  const auto id = static_cast<Symbol>(t.names.size());
  const std::string& stored = t.names.emplace_back(name);
  t.ids.emplace(stored, id);
  return id;
}

const std::string& symbolName(Symbol symbol) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  return t.names.at(symbol);
}

}  // namespace gradual

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gradual {

// Interned selector name. Ids are process-wide and never reused, so shapes,
// request nodes and primitive tables built by different components agree on
// them without coordination.
using Symbol = std::uint32_t;

Symbol intern(std::string_view name);
const std::string& symbolName(Symbol symbol);

}  // namespace gradual

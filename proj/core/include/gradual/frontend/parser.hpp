#pragma once

#include <string>
#include <string_view>

#include "gradual/frontend/ast.hpp"

namespace gradual::frontend {

/// Parses and resolves `source`. Throws ParseError on malformed input and
/// ResolveError on unresolved identifiers or type names.
Program parse(std::string_view source, std::string fileName = "<input>");

/// Syntax only; the returned program has no resolution data.
Program parseUnresolved(std::string_view source, std::string fileName = "<input>");

/// Binds identifiers, allocates frame slots and check sites.
void resolve(Program& program);

Program parseFile(const std::string& path);

}  // namespace gradual::frontend

#pragma once

#include <string>
#include <string_view>

#include "gradual/frontend/ast.hpp"

namespace gradual::interp {

enum class ExitKind : std::uint8_t { Ok, TypeError, DoesNotUnderstand, RuntimeError };

std::string_view toString(ExitKind kind);

/// Outcome of executing program code. Errors never escape as exceptions past
/// the interpreter boundary.
struct ExitStatus {
  ExitKind kind = ExitKind::Ok;
  std::string message;
  frontend::SiteId site = frontend::kNoSite;  // TypeError only
  std::string file;
  frontend::SourceLocation location;

  bool ok() const { return kind == ExitKind::Ok; }

  friend bool operator==(const ExitStatus&, const ExitStatus&) = default;
};

/// `file:line:col: TypeError: message`, or "ok".
std::string describe(const ExitStatus& status);

}  // namespace gradual::interp

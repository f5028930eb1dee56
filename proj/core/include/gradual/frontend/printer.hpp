#pragma once

#include <string>

#include "gradual/frontend/ast.hpp"

namespace gradual::frontend {

struct PrintOptions {
  // Drop every `: T` and `-> T`, producing the untyped variant of a program.
  bool eraseAnnotations = false;
};

/// Renders a program back to source. Debugging aid and the mechanism behind
/// annotation erasure; the layout is not a stable format.
std::string printProgram(const Program& program, PrintOptions options = {});

/// Location-free structural rendering, used to compare ASTs for equality.
std::string dumpTree(const Program& program);

std::string formatNumber(double value);

}  // namespace gradual::frontend

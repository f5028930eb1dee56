#pragma once

#include <string>
#include <vector>

#include "gradual/frontend/ast.hpp"

namespace gradual::frontend {

enum class AnnotationPosition : std::uint8_t { Parameter, Return, Variable };

struct MissingAnnotation {
  AnnotationPosition position;
  std::string description;  // e.g. "parameter v of printRegistration"
  SourceLocation location;
};

/// Lists every annotation position (parameters, method results, var and def
/// declarations) that carries no type in the source. Empty iff the program
/// is completely typed. An explicit `Unknown` counts as an annotation.
std::vector<MissingAnnotation> checkCompleteness(const Program& program);

/// Number of annotation positions in the program, present or absent.
std::size_t countAnnotationSlots(const Program& program);

}  // namespace gradual::frontend

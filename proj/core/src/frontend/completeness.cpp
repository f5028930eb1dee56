#include "gradual/frontend/completeness.hpp"

namespace gradual::frontend {

std::vector<MissingAnnotation> checkCompleteness(const Program& program) {
  std::vector<MissingAnnotation> missing;
  walk(program, [&](const Node& node) {
    if (node.kind == NodeKind::MethodDecl) {
      const auto& m = as<MethodDecl>(node);
      for (const auto& p : m.params) {
        if (p.annotation.isUnknownMarker()) {
          missing.push_back({AnnotationPosition::Parameter, "parameter " + p.name + " of " + m.name, p.location});
        }
      }
      if (m.returnAnnotation.isUnknownMarker()) {
        missing.push_back({AnnotationPosition::Return, "result of " + m.name, m.location});
      }
    } else if (node.kind == NodeKind::VarDecl) {
      const auto& v = as<VarDecl>(node);
      if (v.annotation.isUnknownMarker()) {
        missing.push_back({AnnotationPosition::Variable, (v.isDef ? "def " : "var ") + v.name, v.location});
      }
    }
  });
  return missing;
}

std::size_t countAnnotationSlots(const Program& program) {
  std::size_t slots = 0;
  walk(program, [&](const Node& node) {
    if (node.kind == NodeKind::MethodDecl) slots += as<MethodDecl>(node).params.size() + 1;
    if (node.kind == NodeKind::VarDecl) slots += 1;
  });
  return slots;
}

}  // namespace gradual::frontend

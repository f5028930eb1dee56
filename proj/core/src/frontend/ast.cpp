#include "gradual/frontend/ast.hpp"

namespace gradual::frontend {

std::string formatLocation(std::string_view file, SourceLocation location) {
  std::string out(file.empty() ? std::string_view("<input>") : file);
  out += ':';
  out += std::to_string(location.line);
  out += ':';
  out += std::to_string(location.column);
  return out;
}

FrontendError::FrontendError(std::string file, SourceLocation location, const std::string& message)
    : std::runtime_error(formatLocation(file, location) + ": " + message),
      file_(std::move(file)),
      location_(location),
      detail_(message) {}

std::string_view toString(SiteKind kind) {
  switch (kind) {
    case SiteKind::Argument: return "argument";
    case SiteKind::Return: return "return";
    case SiteKind::VarRead: return "varRead";
    case SiteKind::VarWrite: return "varWrite";
    case SiteKind::FieldInit: return "fieldInit";
  }
  return "?";
}

std::string formatMember(const MemberSig& member) {
  std::string out = member.name;
  if (member.arity == 0) return out;
  out += '(';
  for (std::uint32_t i = 0; i < member.arity; ++i) {
    if (i != 0) out += ", ";
    out += '_';
  }
  out += ')';
  return out;
}

const MethodDecl* Program::findMethod(std::string_view name, std::uint32_t arity) const {
  for (const auto& stmt : statements) {
    if (stmt->kind != NodeKind::MethodDecl) continue;
    const auto& method = as<MethodDecl>(*stmt);
    if (method.name == name && method.arity() == arity) return &method;
  }
  return nullptr;
}

const TypeDecl* Program::findType(std::string_view name) const {
  for (const auto& decl : typeDecls) {
    if (decl->name == name) return decl.get();
  }
  return nullptr;
}

}  // namespace gradual::frontend

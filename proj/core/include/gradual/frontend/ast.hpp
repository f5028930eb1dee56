#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gradual/frontend/symbols.hpp"

namespace gradual::frontend {

struct SourceLocation {
  std::uint32_t line = 0;
  std::uint32_t column = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

std::string formatLocation(std::string_view file, SourceLocation location);

/// Errors raised while turning source text into a resolved Program.
class FrontendError : public std::runtime_error {
 public:
  FrontendError(std::string file, SourceLocation location, const std::string& message);

  const std::string& file() const { return file_; }
  SourceLocation location() const { return location_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string file_;
  SourceLocation location_;
  std::string detail_;
};

class ParseError : public FrontendError {
 public:
  using FrontendError::FrontendError;
};

class ResolveError : public FrontendError {
 public:
  using FrontendError::FrontendError;
};

using SiteId = std::uint32_t;
inline constexpr SiteId kNoSite = ~SiteId{0};

enum class SiteKind : std::uint8_t { Argument, Return, VarRead, VarWrite, FieldInit };

std::string_view toString(SiteKind kind);

/// A member signature of a structural type: name plus arity. Writers are
/// spelled with a trailing `:=` (e.g. `registration:=` with arity 1).
struct MemberSig {
  std::string name;
  std::uint32_t arity = 0;

  friend auto operator<=>(const MemberSig&, const MemberSig&) = default;
  friend bool operator==(const MemberSig&, const MemberSig&) = default;
};

std::string formatMember(const MemberSig& member);

struct TypeDecl {
  std::string name;
  std::vector<MemberSig> members;
  SourceLocation location;
};

/// The built-in name that always resolves to the Unknown type.
inline constexpr std::string_view kUnknownTypeName = "Unknown";

struct Annotation {
  // nullopt when the source carries no annotation (the Unknown-marker).
  std::optional<std::string> typeName;
  SourceLocation location;
  // Set by the resolver; null for both the marker and an explicit `Unknown`.
  const TypeDecl* resolved = nullptr;

  bool isUnknownMarker() const { return !typeName.has_value(); }
  bool requiresCheck() const { return resolved != nullptr; }
};

enum class NodeKind : std::uint8_t {
  NumberLiteral,
  StringLiteral,
  BooleanLiteral,
  NilLiteral,
  Interpolation,
  Self,
  ObjectLiteral,
  BlockLiteral,
  ImplicitRequest,
  ExplicitRequest,
  Assign,
  If,
  While,
  Return,
  VarDecl,
  MethodDecl,
};

struct Node {
  const NodeKind kind;
  SourceLocation location;

  virtual ~Node() = default;

 protected:
  Node(NodeKind k, SourceLocation loc) : kind(k), location(loc) {}
};

using NodePtr = std::unique_ptr<Node>;
using NodeList = std::vector<NodePtr>;

struct MethodDecl;
struct VarDecl;

enum class Builtin : std::uint8_t { None, Print, NewArray };

enum class BindingKind : std::uint8_t {
  Unresolved,
  Local,         // slot in the frame `hops` levels up
  Field,         // field slot of the object that is `self` of the frame `hops` levels up
  ModuleMethod,  // top-level method, called directly
  ObjectMethod,  // method of the lexically enclosing object at `hops`
  Builtin,
};

struct Resolution {
  BindingKind kind = BindingKind::Unresolved;
  std::uint32_t hops = 0;
  std::uint32_t slot = 0;
  const VarDecl* var = nullptr;  // null for parameters
  const MethodDecl* method = nullptr;
  Builtin builtin = Builtin::None;
};

struct NumberLiteral final : Node {
  double value;
  NumberLiteral(SourceLocation loc, double v) : Node(NodeKind::NumberLiteral, loc), value(v) {}
};

struct StringLiteral final : Node {
  std::string value;
  StringLiteral(SourceLocation loc, std::string v)
      : Node(NodeKind::StringLiteral, loc), value(std::move(v)) {}
};

struct BooleanLiteral final : Node {
  bool value;
  BooleanLiteral(SourceLocation loc, bool v) : Node(NodeKind::BooleanLiteral, loc), value(v) {}
};

struct NilLiteral final : Node {
  explicit NilLiteral(SourceLocation loc) : Node(NodeKind::NilLiteral, loc) {}
};

// "a {e} b": StringLiteral parts are copied verbatim, any other part is
// converted with the primitive asString.
struct Interpolation final : Node {
  NodeList parts;
  explicit Interpolation(SourceLocation loc) : Node(NodeKind::Interpolation, loc) {}
};

struct SelfExpr final : Node {
  std::uint32_t hops = 0;
  explicit SelfExpr(SourceLocation loc) : Node(NodeKind::Self, loc) {}
};

struct Parameter {
  std::string name;
  Annotation annotation;
  SourceLocation location;
  SiteId site = kNoSite;
};

struct VarDecl final : Node {
  std::string name;
  bool isDef = false;
  bool isPublic = false;
  Annotation annotation;
  NodePtr initializer;

  // Resolution.
  bool isField = false;
  std::uint32_t slot = 0;
  SiteId initSite = kNoSite;       // write check of the initializing value
  SiteId accessorReadSite = kNoSite;   // public var reader request
  SiteId accessorWriteSite = kNoSite;  // public var writer request

  VarDecl(SourceLocation loc, std::string n, bool def)
      : Node(NodeKind::VarDecl, loc), name(std::move(n)), isDef(def) {}
};

struct MethodDecl final : Node {
  std::string name;
  std::vector<Parameter> params;
  Annotation returnAnnotation;
  NodeList body;

  // Resolution.
  Symbol selector = 0;
  std::uint32_t frameSize = 0;
  SiteId returnSite = kNoSite;

  MethodDecl(SourceLocation loc, std::string n)
      : Node(NodeKind::MethodDecl, loc), name(std::move(n)) {}

  std::uint32_t arity() const { return static_cast<std::uint32_t>(params.size()); }
};

struct ObjectLiteral final : Node {
  NodeList members;  // VarDecl or MethodDecl, in source order

  // Resolution.
  std::uint32_t literalId = 0;
  std::uint32_t initFrameSize = 0;
  std::vector<const VarDecl*> fields;      // indexed by field slot
  std::vector<const MethodDecl*> methods;  // in declaration order

  explicit ObjectLiteral(SourceLocation loc) : Node(NodeKind::ObjectLiteral, loc) {}
};

struct BlockParam {
  std::string name;
  SourceLocation location;
};

struct BlockLiteral final : Node {
  std::vector<BlockParam> params;
  NodeList body;
  std::uint32_t frameSize = 0;
  explicit BlockLiteral(SourceLocation loc) : Node(NodeKind::BlockLiteral, loc) {}
};

// A request without an explicit receiver: a variable read, a self or outer
// method request, a top-level method call or a built-in.
struct ImplicitRequest final : Node {
  std::string name;
  NodeList args;
  bool stringArgument = false;  // written as `name "literal"`
  Resolution target;
  SiteId readSite = kNoSite;
  ImplicitRequest(SourceLocation loc, std::string n)
      : Node(NodeKind::ImplicitRequest, loc), name(std::move(n)) {}
};

enum class RequestSyntax : std::uint8_t { Dotted, Binary, Prefix, Writer };

struct ExplicitRequest final : Node {
  NodePtr receiver;
  std::string selector;  // writer requests end in ":="
  NodeList args;
  RequestSyntax syntax = RequestSyntax::Dotted;
  bool stringArgument = false;

  // Resolution.
  Symbol symbol = 0;
  std::uint32_t requestId = 0;

  ExplicitRequest(SourceLocation loc, NodePtr recv, std::string sel)
      : Node(NodeKind::ExplicitRequest, loc), receiver(std::move(recv)), selector(std::move(sel)) {}
};

// `name := value` without receiver: a local variable or field write.
struct Assign final : Node {
  std::string name;
  NodePtr value;
  Resolution target;
  SiteId writeSite = kNoSite;
  Assign(SourceLocation loc, std::string n, NodePtr v)
      : Node(NodeKind::Assign, loc), name(std::move(n)), value(std::move(v)) {}
};

struct If final : Node {
  NodePtr condition;
  NodeList thenBody;
  NodeList elseBody;
  bool hasElse = false;
  explicit If(SourceLocation loc) : Node(NodeKind::If, loc) {}
};

struct While final : Node {
  NodePtr condition;
  NodeList body;
  explicit While(SourceLocation loc) : Node(NodeKind::While, loc) {}
};

struct Return final : Node {
  NodePtr value;  // may be null
  explicit Return(SourceLocation loc) : Node(NodeKind::Return, loc) {}
};

template <typename T>
const T& as(const Node& node) {
  return static_cast<const T&>(node);
}

template <typename T>
T& as(Node& node) {
  return static_cast<T&>(node);
}

struct SiteInfo {
  SiteId id = kNoSite;
  SiteKind kind = SiteKind::Argument;
  SourceLocation location;
  std::string typeName;
  const TypeDecl* type = nullptr;
  std::string subject;  // e.g. "parameter d of registerTo"
};

/// A parsed and resolved compilation unit. The AST is immutable after
/// resolution; all run-time state (shapes, caches, check sites) lives in the
/// interpreter, so one Program can be executed by several interpreters.
class Program {
 public:
  std::string fileName;
  std::vector<std::unique_ptr<TypeDecl>> typeDecls;
  NodeList statements;

  // Resolution.
  std::vector<SiteInfo> sites;
  std::uint32_t moduleFrameSize = 0;
  std::uint32_t literalCount = 0;
  std::uint32_t requestCount = 0;

  const MethodDecl* findMethod(std::string_view name, std::uint32_t arity = 0) const;
  const TypeDecl* findType(std::string_view name) const;
};

/// Pre-order traversal over `node` and everything nested in it, including
/// method bodies, object members and block bodies.
template <typename Fn>
void walk(const Node& node, Fn&& fn) {
  fn(node);
  auto list = [&](const NodeList& nodes) {
    for (const auto& n : nodes) walk(*n, fn);
  };
  switch (node.kind) {
    case NodeKind::Interpolation: list(as<Interpolation>(node).parts); break;
    case NodeKind::ObjectLiteral: list(as<ObjectLiteral>(node).members); break;
    case NodeKind::BlockLiteral: list(as<BlockLiteral>(node).body); break;
    case NodeKind::ImplicitRequest: list(as<ImplicitRequest>(node).args); break;
    case NodeKind::ExplicitRequest:
      walk(*as<ExplicitRequest>(node).receiver, fn);
      list(as<ExplicitRequest>(node).args);
      break;
    case NodeKind::Assign: walk(*as<Assign>(node).value, fn); break;
    case NodeKind::If:
      walk(*as<If>(node).condition, fn);
      list(as<If>(node).thenBody);
      list(as<If>(node).elseBody);
      break;
    case NodeKind::While:
      walk(*as<While>(node).condition, fn);
      list(as<While>(node).body);
      break;
    case NodeKind::Return:
      if (as<Return>(node).value) walk(*as<Return>(node).value, fn);
      break;
    case NodeKind::VarDecl:
      if (as<VarDecl>(node).initializer) walk(*as<VarDecl>(node).initializer, fn);
      break;
    case NodeKind::MethodDecl: list(as<MethodDecl>(node).body); break;
    default: break;
  }
}

template <typename Fn>
void walk(const Program& program, Fn&& fn) {
  for (const auto& stmt : program.statements) walk(*stmt, fn);
}

}  // namespace gradual::frontend

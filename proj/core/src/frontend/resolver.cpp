#include <map>
#include <utility>

#include "gradual/frontend/parser.hpp"

namespace gradual::frontend {
namespace {

enum class ScopeKind : std::uint8_t { Module, Method, Block, Init, Object, Lexical };

bool isFrame(ScopeKind kind) { return kind != ScopeKind::Object && kind != ScopeKind::Lexical; }

struct Binding {
  BindingKind kind = BindingKind::Unresolved;
  std::uint32_t slot = 0;
  const VarDecl* var = nullptr;
  const MethodDecl* method = nullptr;
};

struct Scope {
  ScopeKind kind;
  Scope* parent;
  std::map<std::pair<std::string, std::uint32_t>, Binding> names;
  std::uint32_t frameSlots = 0;  // frame scopes only

  Scope(ScopeKind k, Scope* p) : kind(k), parent(p) {}
};

struct Lookup {
  const Binding* binding = nullptr;
  std::uint32_t hops = 0;
};

class Resolver {
 public:
  explicit Resolver(Program& program) : program_(program) {}

  void run() {
    for (const auto& decl : program_.typeDecls) {
      if (decl->name == kUnknownTypeName) fail(decl->location, "cannot redefine type Unknown");
      if (!types_.emplace(decl->name, decl.get()).second) {
        fail(decl->location, "duplicate type '" + decl->name + "'");
      }
      std::map<std::pair<std::string, std::uint32_t>, bool> seen;
      for (const auto& m : decl->members) {
        if (!seen.emplace(std::pair(m.name, m.arity), true).second) {
          fail(decl->location, "duplicate member " + formatMember(m) + " in type '" + decl->name + "'");
        }
      }
    }

    Scope module(ScopeKind::Module, nullptr);
    for (auto& stmt : program_.statements) {
      if (stmt->kind == NodeKind::MethodDecl) {
        auto& method = as<MethodDecl>(*stmt);
        declare(module, method.name, method.arity(), {BindingKind::ModuleMethod, 0, nullptr, &method},
                method.location);
      } else if (stmt->kind == NodeKind::VarDecl) {
        auto& var = as<VarDecl>(*stmt);
        var.slot = module.frameSlots++;
        declare(module, var.name, 0, {BindingKind::Local, var.slot, &var, nullptr}, var.location);
      }
    }
    for (auto& stmt : program_.statements) {
      if (stmt->kind == NodeKind::MethodDecl) {
        resolveMethod(as<MethodDecl>(*stmt), module);
      } else if (stmt->kind == NodeKind::VarDecl) {
        resolveVarInitializer(as<VarDecl>(*stmt), module, /*field=*/false);
      } else {
        resolveStatement(*stmt, module);
      }
    }
    program_.moduleFrameSize = module.frameSlots;
  }

 private:
  [[noreturn]] void fail(SourceLocation at, const std::string& message) const {
    throw ResolveError(program_.fileName, at, message);
  }

  void declare(Scope& scope, const std::string& name, std::uint32_t arity, Binding binding,
               SourceLocation at) {
    if (!scope.names.emplace(std::pair(name, arity), binding).second) {
      fail(at, "duplicate declaration of '" + name + "'" +
                   (arity ? "(" + std::to_string(arity) + " arguments)" : ""));
    }
  }

  static Scope& frameOf(Scope& scope) {
    Scope* s = &scope;
    while (!isFrame(s->kind)) s = s->parent;
    return *s;
  }

  Lookup lookup(Scope& from, const std::string& name, std::uint32_t arity) const {
    std::uint32_t framesBefore = 0;
    for (Scope* s = &from; s != nullptr; s = s->parent) {
      if (auto it = s->names.find(std::pair(name, arity)); it != s->names.end()) {
        // A member of an object is reached through `self` of the frame nested
        // directly inside that object.
        const std::uint32_t hops = s->kind == ScopeKind::Object ? framesBefore - 1 : framesBefore;
        return {&it->second, hops};
      }
      if (isFrame(s->kind)) ++framesBefore;
    }
    return {};
  }

  void resolveAnnotation(Annotation& annotation) {
    if (!annotation.typeName || *annotation.typeName == kUnknownTypeName) {
      annotation.resolved = nullptr;
      return;
    }
    auto it = types_.find(*annotation.typeName);
    if (it == types_.end()) fail(annotation.location, "unknown type '" + *annotation.typeName + "'");
    annotation.resolved = it->second;
  }

  SiteId newSite(SiteKind kind, SourceLocation at, const Annotation& annotation, std::string subject) {
    SiteInfo info;
    info.id = static_cast<SiteId>(program_.sites.size());
    info.kind = kind;
    info.location = at;
    info.typeName = *annotation.typeName;
    info.type = annotation.resolved;
    info.subject = std::move(subject);
    program_.sites.push_back(std::move(info));
    return program_.sites.back().id;
  }

  void resolveMethod(MethodDecl& method, Scope& parent) {
    method.selector = intern(method.name);
    Scope scope(ScopeKind::Method, &parent);
    for (auto& p : method.params) {
      resolveAnnotation(p.annotation);
      const std::uint32_t slot = scope.frameSlots++;
      declare(scope, p.name, 0, {BindingKind::Local, slot, nullptr, nullptr}, p.location);
      if (p.annotation.requiresCheck()) {
        p.site = newSite(SiteKind::Argument, p.location, p.annotation,
                         "parameter " + p.name + " of " + method.name);
      }
    }
    resolveAnnotation(method.returnAnnotation);
    if (method.returnAnnotation.requiresCheck()) {
      method.returnSite = newSite(SiteKind::Return, method.returnAnnotation.location,
                                  method.returnAnnotation, "result of " + method.name);
    }
    resolveBody(method.body, scope);
    method.frameSize = scope.frameSlots;
  }

  void resolveBody(NodeList& body, Scope& scope) {
    for (auto& stmt : body) resolveStatement(*stmt, scope);
  }

  void resolveVarInitializer(VarDecl& var, Scope& scope, bool field) {
    resolveAnnotation(var.annotation);
    if (var.initializer) resolveExpression(*var.initializer, scope);
    const std::string what = (var.isDef ? "def " : "var ") + var.name;
    if (var.initializer && var.annotation.requiresCheck()) {
      var.initSite = newSite(field ? SiteKind::FieldInit : SiteKind::VarWrite, var.location,
                             var.annotation, what);
    }
    if (field && var.isPublic && !var.isDef && var.annotation.requiresCheck()) {
      var.accessorReadSite = newSite(SiteKind::VarRead, var.location, var.annotation, what + " (reader)");
      var.accessorWriteSite = newSite(SiteKind::VarWrite, var.location, var.annotation, what + " (writer)");
    }
  }

  void resolveStatement(Node& node, Scope& scope) {
    switch (node.kind) {
      case NodeKind::VarDecl: {
        auto& var = as<VarDecl>(node);
        resolveVarInitializer(var, scope, false);
        var.slot = frameOf(scope).frameSlots++;
        declare(scope, var.name, 0, {BindingKind::Local, var.slot, &var, nullptr}, var.location);
        return;
      }
      case NodeKind::MethodDecl: fail(node.location, "nested method declaration");
      case NodeKind::Return: {
        auto& ret = as<Return>(node);
        if (ret.value) resolveExpression(*ret.value, scope);
        return;
      }
      default: resolveExpression(node, scope);
    }
  }

  void resolveExpression(Node& node, Scope& scope) {
    switch (node.kind) {
      case NodeKind::NumberLiteral:
      case NodeKind::StringLiteral:
      case NodeKind::BooleanLiteral:
      case NodeKind::NilLiteral: return;
      case NodeKind::Interpolation:
        for (auto& part : as<Interpolation>(node).parts) resolveExpression(*part, scope);
        return;
      case NodeKind::Self: return resolveSelf(as<SelfExpr>(node), scope);
      case NodeKind::ObjectLiteral: return resolveObject(as<ObjectLiteral>(node), scope);
      case NodeKind::BlockLiteral: return resolveBlock(as<BlockLiteral>(node), scope);
      case NodeKind::ImplicitRequest: return resolveImplicit(as<ImplicitRequest>(node), scope);
      case NodeKind::ExplicitRequest: {
        auto& req = as<ExplicitRequest>(node);
        req.symbol = intern(req.selector);
        req.requestId = program_.requestCount++;
        resolveExpression(*req.receiver, scope);
        for (auto& arg : req.args) resolveExpression(*arg, scope);
        return;
      }
      case NodeKind::Assign: return resolveAssign(as<Assign>(node), scope);
      case NodeKind::If: {
        auto& n = as<If>(node);
        resolveExpression(*n.condition, scope);
        Scope thenScope(ScopeKind::Lexical, &scope);
        resolveBody(n.thenBody, thenScope);
        Scope elseScope(ScopeKind::Lexical, &scope);
        resolveBody(n.elseBody, elseScope);
        return;
      }
      case NodeKind::While: {
        auto& n = as<While>(node);
        resolveExpression(*n.condition, scope);
        Scope body(ScopeKind::Lexical, &scope);
        resolveBody(n.body, body);
        return;
      }
      case NodeKind::Return:
      case NodeKind::VarDecl:
      case NodeKind::MethodDecl: resolveStatement(node, scope); return;
    }
  }

  void resolveSelf(SelfExpr& self, Scope& scope) {
    std::uint32_t framesBefore = 0;
    for (Scope* s = &scope; s != nullptr; s = s->parent) {
      if (s->kind == ScopeKind::Object) {
        self.hops = framesBefore - 1;
        return;
      }
      if (isFrame(s->kind)) ++framesBefore;
    }
    fail(self.location, "'self' used outside of an object");
  }

  void resolveObject(ObjectLiteral& obj, Scope& parent) {
    obj.literalId = program_.literalCount++;
    Scope objectScope(ScopeKind::Object, &parent);
    std::map<std::pair<std::string, std::uint32_t>, bool> members;
    auto claim = [&](const std::string& name, std::uint32_t arity, SourceLocation at) {
      if (!members.emplace(std::pair(name, arity), true).second) {
        fail(at, "duplicate member '" + name + "' in object");
      }
    };
    for (auto& m : obj.members) {
      if (m->kind == NodeKind::VarDecl) {
        auto& var = as<VarDecl>(*m);
        var.isField = true;
        var.slot = static_cast<std::uint32_t>(obj.fields.size());
        obj.fields.push_back(&var);
        claim(var.name, 0, var.location);
        if (var.isPublic && !var.isDef) claim(var.name + ":=", 1, var.location);
        declare(objectScope, var.name, 0, {BindingKind::Field, var.slot, &var, nullptr}, var.location);
      } else {
        auto& method = as<MethodDecl>(*m);
        claim(method.name, method.arity(), method.location);
        obj.methods.push_back(&method);
        declare(objectScope, method.name, method.arity(), {BindingKind::ObjectMethod, 0, nullptr, &method},
                method.location);
      }
    }
    Scope init(ScopeKind::Init, &objectScope);
    for (auto& m : obj.members) {
      if (m->kind == NodeKind::VarDecl) {
        resolveVarInitializer(as<VarDecl>(*m), init, /*field=*/true);
      } else {
        resolveMethod(as<MethodDecl>(*m), objectScope);
      }
    }
    obj.initFrameSize = init.frameSlots;
  }

  void resolveBlock(BlockLiteral& block, Scope& parent) {
    Scope scope(ScopeKind::Block, &parent);
    for (const auto& p : block.params) {
      const std::uint32_t slot = scope.frameSlots++;
      declare(scope, p.name, 0, {BindingKind::Local, slot, nullptr, nullptr}, p.location);
    }
    resolveBody(block.body, scope);
    block.frameSize = scope.frameSlots;
  }

  void resolveImplicit(ImplicitRequest& req, Scope& scope) {
    for (auto& arg : req.args) resolveExpression(*arg, scope);
    const auto arity = static_cast<std::uint32_t>(req.args.size());
    const Lookup found = lookup(scope, req.name, arity);
    if (found.binding == nullptr) {
      if (req.name == "print" && arity == 1) {
        req.target.kind = BindingKind::Builtin;
        req.target.builtin = Builtin::Print;
        return;
      }
      if (req.name == "newArray" && arity == 1) {
        req.target.kind = BindingKind::Builtin;
        req.target.builtin = Builtin::NewArray;
        return;
      }
      fail(req.location, "unresolved identifier '" + req.name + "'" +
                             (arity ? " with " + std::to_string(arity) + " argument(s)" : ""));
    }
    const Binding& b = *found.binding;
    req.target.kind = b.kind;
    req.target.hops = found.hops;
    req.target.slot = b.slot;
    req.target.var = b.var;
    req.target.method = b.method;
    const bool isVariable = b.kind == BindingKind::Local || b.kind == BindingKind::Field;
    if (isVariable && b.var != nullptr && !b.var->isDef && b.var->annotation.requiresCheck()) {
      req.readSite = newSite(SiteKind::VarRead, req.location, b.var->annotation, "read of " + req.name);
    }
  }

  void resolveAssign(Assign& assign, Scope& scope) {
    resolveExpression(*assign.value, scope);
    const Lookup found = lookup(scope, assign.name, 0);
    if (found.binding == nullptr) fail(assign.location, "unresolved identifier '" + assign.name + "'");
    const Binding& b = *found.binding;
    const bool isVariable = b.kind == BindingKind::Local || b.kind == BindingKind::Field;
    if (!isVariable) fail(assign.location, "cannot assign to method '" + assign.name + "'");
    if (b.var == nullptr) fail(assign.location, "cannot assign to parameter '" + assign.name + "'");
    if (b.var->isDef) fail(assign.location, "cannot assign to def '" + assign.name + "'");
    assign.target.kind = b.kind;
    assign.target.hops = found.hops;
    assign.target.slot = b.slot;
    assign.target.var = b.var;
    if (b.var->annotation.requiresCheck()) {
      assign.writeSite = newSite(SiteKind::VarWrite, assign.location, b.var->annotation,
                                 "write of " + assign.name);
    }
  }

  Program& program_;
  std::map<std::string, const TypeDecl*, std::less<>> types_;
};

}  // namespace

void resolve(Program& program) {
  program.sites.clear();
  program.literalCount = 0;
  program.requestCount = 0;
  Resolver(program).run();
}

}  // namespace gradual::frontend

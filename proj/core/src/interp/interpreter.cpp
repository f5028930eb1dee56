#include "gradual/interp/interpreter.hpp"

#include "gradual/frontend/printer.hpp"

namespace gradual::interp {

using namespace frontend;
using runtime::Environment;
using runtime::MemberKind;
using runtime::ObjectInstance;
using runtime::ValueKind;

std::string_view toString(ExitKind kind) {
  switch (kind) {
    case ExitKind::Ok: return "ok";
    case ExitKind::TypeError: return "TypeError";
    case ExitKind::DoesNotUnderstand: return "DoesNotUnderstand";
    case ExitKind::RuntimeError: return "RuntimeError";
  }
  return "?";
}

std::string describe(const ExitStatus& status) {
  if (status.ok()) return "ok";
  return formatLocation(status.file, status.location) + ": " + std::string(toString(status.kind)) + ": " +
         status.message;
}

Interpreter::Interpreter(const Program& program, stats::StatsRegistry& stats, std::ostream& out)
    : program_(program), stats_(stats), out_(out) {
  sites_.reserve(program.sites.size());
  for (const auto& info : program.sites) {
    sites_.emplace_back(info.id, info.kind, types_.interner().intern(*info.type), info.typeName, program.fileName,
                        info.location);
    stats_.describeSite(info.id, {program.fileName, info.location.line, std::string(toString(info.kind))});
  }
  caches_.resize(program.requestCount);
  module_ = std::make_shared<Environment>();
  module_->slots.assign(program.moduleFrameSize, Value::uninitialized());
}

template <typename Fn>
ExitStatus Interpreter::guarded(Fn&& fn) {
  ExitStatus status;
  try {
    fn();
  } catch (const checks::TypeError& e) {
    status = {ExitKind::TypeError, e.what(), e.site(), e.file(), e.location()};
  } catch (const DoesNotUnderstand& e) {
    status = {ExitKind::DoesNotUnderstand, e.what(), kNoSite, e.file(), e.location()};
  } catch (const RuntimeError& e) {
    status = {ExitKind::RuntimeError, e.what(), kNoSite, e.file(), e.location()};
  }
  if (!status.ok()) {
    argStack_.clear();
    depth_ = 0;
  }
  syncGlobals();
  return status;
}

void Interpreter::syncGlobals() {
  stats_.global().shapeCount = shapes_.size();
  stats_.global().internedTypeCount = types_.interner().size();
}

ExitStatus Interpreter::load() {
  loaded_ = true;
  return guarded([&] {
    Value last;
    exec(program_.statements, module_, last);
  });
}

ExitStatus Interpreter::call(std::string_view name, Value* result, std::string* rendered) {
  const MethodDecl* method = program_.findMethod(name, 0);
  if (method == nullptr) {
    return {ExitKind::DoesNotUnderstand, "no top-level method " + std::string(name), kNoSite, program_.fileName, {}};
  }
  return guarded([&] {
    Value v = invoke(*method, nullptr, module_, argStack_.size(), method->location);
    if (rendered != nullptr) *rendered = render(v);
    if (result != nullptr) *result = std::move(v);
  });
}

ExitStatus run(const Program& program, stats::StatsRegistry& stats, std::ostream& out) {
  Interpreter interpreter(program, stats, out);
  return interpreter.load();
}

// ---- helpers ------------------------------------------------------------------

void Interpreter::runtimeError(SourceLocation at, const std::string& message) const {
  throw RuntimeError(program_.fileName, at, message);
}

Environment& Interpreter::frameAt(const EnvPtr& env, std::uint32_t hops) {
  Environment* e = env.get();
  while (hops-- > 0) e = e->parent.get();
  return *e;
}

void Interpreter::check(SiteId id, const Value& value) {
  if (id == kNoSite) return;
  const auto& config = stats_.config();
  if (!config.checksEnabled) return;
  checks::CheckSite& site = sites_[id];
  if (!config.readChecks && site.kind() == SiteKind::VarRead) return;
  if (observer_) observer_(program_.sites[id], value);
  site.perform(value, shapes_, types_, stats_);
}

bool Interpreter::truthy(const Value& value, SourceLocation at) const {
  if (value.kind() != ValueKind::Bool) {
    runtimeError(at, "condition evaluated to " + std::string(runtime::toString(value.kind())) +
                         ", expected a boolean");
  }
  return value.asBool();
}

std::string Interpreter::render(const Value& value) {
  switch (value.kind()) {
    case ValueKind::Nil:
    case ValueKind::Uninitialized: return "nil";
    case ValueKind::Bool: return value.asBool() ? "true" : "false";
    case ValueKind::Number: return formatNumber(value.asNumber());
    case ValueKind::String: return value.asString();
    case ValueKind::Array: {
      std::string out = "[";
      const auto& elements = value.asArray().elements;
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i > 0) out += ", ";
        out += render(elements[i]);
      }
      return out + "]";
    }
    case ValueKind::Block: return "a block";
    case ValueKind::Object: {
      const auto& obj = value.asObject();
      const auto* member = obj.shape->lookup(intern("asString"), 0);
      if (member == nullptr || member->kind != MemberKind::Method) return "an object";
      Value text = invoke(*obj.literal->methods[member->index], value.objectRef(), obj.outer, argStack_.size(),
                          obj.literal->location);
      if (text.kind() == ValueKind::String) return text.asString();
      return render(text);
    }
  }
  return "";
}

// ---- statements ---------------------------------------------------------------

Interpreter::Flow Interpreter::exec(const NodeList& body, const EnvPtr& env, Value& last) {
  last = Value();
  for (const auto& stmt : body) {
    if (execStatement(*stmt, env, last) == Flow::Return) return Flow::Return;
  }
  return Flow::Normal;
}

Interpreter::Flow Interpreter::execStatement(const Node& node, const EnvPtr& env, Value& last) {
  switch (node.kind) {
    case NodeKind::VarDecl: {
      const auto& var = as<VarDecl>(node);
      Value v = Value::uninitialized();
      if (var.initializer) {
        v = eval(*var.initializer, env);
        check(var.initSite, v);
      }
      env->slots[var.slot] = std::move(v);
      last = Value();
      return Flow::Normal;
    }
    case NodeKind::MethodDecl: last = Value(); return Flow::Normal;
    case NodeKind::Return: {
      const auto& ret = as<Return>(node);
      last = ret.value ? eval(*ret.value, env) : Value();
      return Flow::Return;
    }
    case NodeKind::If: {
      Flow flow = Flow::Normal;
      last = evalIf(as<If>(node), env, flow);
      return flow;
    }
    case NodeKind::While: {
      Flow flow = Flow::Normal;
      evalWhile(as<While>(node), env, flow, last);
      return flow;
    }
    default: last = eval(node, env); return Flow::Normal;
  }
}

Value Interpreter::evalIf(const If& node, const EnvPtr& env, Flow& flow) {
  Value last;
  if (truthy(eval(*node.condition, env), node.condition->location)) {
    flow = exec(node.thenBody, env, last);
  } else if (node.hasElse) {
    flow = exec(node.elseBody, env, last);
  }
  return last;
}

void Interpreter::evalWhile(const While& node, const EnvPtr& env, Flow& flow, Value& last) {
  while (truthy(eval(*node.condition, env), node.condition->location)) {
    if (exec(node.body, env, last) == Flow::Return) {
      flow = Flow::Return;
      return;
    }
  }
  last = Value();
}

// ---- expressions --------------------------------------------------------------

Value Interpreter::eval(const Node& node, const EnvPtr& env) {
  switch (node.kind) {
    case NodeKind::NumberLiteral: return Value::number(as<NumberLiteral>(node).value);
    case NodeKind::StringLiteral: return Value::string(as<StringLiteral>(node).value);
    case NodeKind::BooleanLiteral: return Value::boolean(as<BooleanLiteral>(node).value);
    case NodeKind::NilLiteral: return Value();
    case NodeKind::Interpolation: {
      std::string text;
      for (const auto& part : as<Interpolation>(node).parts) {
        if (part->kind == NodeKind::StringLiteral) {
          text += as<StringLiteral>(*part).value;
        } else {
          text += render(eval(*part, env));
        }
      }
      return Value::string(std::move(text));
    }
    case NodeKind::Self: return Value::object(frameAt(env, as<SelfExpr>(node).hops).self);
    case NodeKind::ObjectLiteral: return instantiate(as<ObjectLiteral>(node), env);
    case NodeKind::BlockLiteral: return makeBlock(as<BlockLiteral>(node), env);
    case NodeKind::ImplicitRequest: return evalImplicit(as<ImplicitRequest>(node), env);
    case NodeKind::ExplicitRequest: return evalExplicit(as<ExplicitRequest>(node), env);
    case NodeKind::Assign: {
      const auto& assign = as<Assign>(node);
      Value v = eval(*assign.value, env);
      check(assign.writeSite, v);
      Environment& frame = frameAt(env, assign.target.hops);
      if (assign.target.kind == BindingKind::Field) {
        frame.self->fields[assign.target.slot] = std::move(v);
      } else {
        frame.slots[assign.target.slot] = std::move(v);
      }
      return Value();
    }
    case NodeKind::If: {
      Flow flow = Flow::Normal;
      return evalIf(as<If>(node), env, flow);
    }
    case NodeKind::While: {
      Flow flow = Flow::Normal;
      Value last;
      evalWhile(as<While>(node), env, flow, last);
      return Value();
    }
    case NodeKind::Return:
    case NodeKind::VarDecl:
    case NodeKind::MethodDecl: {
      Value last;
      execStatement(node, env, last);
      return last;
    }
  }
  return Value();
}

Value Interpreter::evalImplicit(const ImplicitRequest& req, const EnvPtr& env) {
  const Resolution& target = req.target;
  switch (target.kind) {
    case BindingKind::Local:
    case BindingKind::Field: {
      Environment& frame = frameAt(env, target.hops);
      const Value& stored =
          target.kind == BindingKind::Field ? frame.self->fields[target.slot] : frame.slots[target.slot];
      if (stored.isUninitialized()) return Value();
      check(req.readSite, stored);
      return stored;
    }
    case BindingKind::ModuleMethod:
    case BindingKind::ObjectMethod: {
      const std::size_t base = argStack_.size();
      for (const auto& arg : req.args) argStack_.push_back(eval(*arg, env));
      if (target.kind == BindingKind::ModuleMethod) {
        return invoke(*target.method, nullptr, module_, base, req.location);
      }
      auto self = frameAt(env, target.hops).self;
      EnvPtr outer = self->outer;
      return invoke(*target.method, std::move(self), std::move(outer), base, req.location);
    }
    case BindingKind::Builtin: {
      Value arg = eval(*req.args.front(), env);
      if (target.builtin == Builtin::Print) {
        out_ << render(arg) << '\n';
        return Value();
      }
      if (!arg.isNumber() || arg.asNumber() < 0 || arg.asNumber() != static_cast<double>(static_cast<std::size_t>(arg.asNumber()))) {
        runtimeError(req.location, "newArray expects a non-negative integer size");
      }
      auto data = std::make_shared<runtime::ArrayData>();
      data->elements.resize(static_cast<std::size_t>(arg.asNumber()));
      return Value::array(std::move(data));
    }
    case BindingKind::Unresolved: break;
  }
  runtimeError(req.location, "unresolved request " + req.name);
}

Value Interpreter::evalExplicit(const ExplicitRequest& req, const EnvPtr& env) {
  Value receiver = eval(*req.receiver, env);
  const std::size_t base = argStack_.size();
  for (const auto& arg : req.args) argStack_.push_back(eval(*arg, env));
  const auto arity = static_cast<std::uint32_t>(req.args.size());

  const runtime::Shape& shape = shapes_.shapeOf(receiver);
  InlineCache& cache = caches_[req.requestId];
  if (cache.shape != &shape) {
    const runtime::MemberRef* member = shape.lookup(req.symbol, arity);
    if (member == nullptr) {
      argStack_.resize(base);
      throw DoesNotUnderstand(program_.fileName, req.location,
                              std::string(runtime::toString(receiver.kind())) + " " + shape.describe() +
                                  " does not understand " + formatMember({req.selector, arity}));
    }
    cache.shape = &shape;
    cache.member = *member;
  }
  const runtime::MemberRef member = cache.member;

  switch (member.kind) {
    case MemberKind::Primitive:
      return primitive(static_cast<runtime::PrimOp>(member.index), receiver, base, req.location);
    case MemberKind::Method: {
      auto obj = receiver.objectRef();
      const MethodDecl& method = *obj->literal->methods[member.index];
      EnvPtr outer = obj->outer;
      return invoke(method, std::move(obj), std::move(outer), base, req.location);
    }
    case MemberKind::Reader: {
      auto& obj = receiver.asObject();
      const Value& stored = obj.fields[member.index];
      if (stored.isUninitialized()) return Value();
      check(obj.literal->fields[member.index]->accessorReadSite, stored);
      return stored;
    }
    case MemberKind::Writer: {
      auto& obj = receiver.asObject();
      Value v = std::move(argStack_[base]);
      argStack_.resize(base);
      check(obj.literal->fields[member.index]->accessorWriteSite, v);
      obj.fields[member.index] = std::move(v);
      return Value();
    }
  }
  return Value();
}

Value Interpreter::instantiate(const ObjectLiteral& literal, const EnvPtr& env) {
  auto obj = std::make_shared<ObjectInstance>();
  obj->shape = &shapes_.forLiteral(literal);
  obj->literal = &literal;
  obj->fields.assign(literal.fields.size(), Value::uninitialized());
  obj->outer = env;
  auto init = std::make_shared<Environment>();
  init->slots.assign(literal.initFrameSize, Value::uninitialized());
  init->parent = env;
  init->self = obj;
  for (const VarDecl* field : literal.fields) {
    if (!field->initializer) continue;
    Value v = eval(*field->initializer, init);
    check(field->initSite, v);
    obj->fields[field->slot] = std::move(v);
  }
  return Value::object(std::move(obj));
}

Value Interpreter::makeBlock(const BlockLiteral& literal, const EnvPtr& env) {
  auto block = std::make_shared<runtime::BlockData>();
  block->code = &literal;
  block->captured = env;
  return Value::block(std::move(block));
}

Value Interpreter::invoke(const MethodDecl& method, std::shared_ptr<ObjectInstance> self, EnvPtr parent,
                          std::size_t argBase, SourceLocation at) {
  if (depth_ >= kMaxCallDepth) {
    argStack_.resize(argBase);
    runtimeError(at, "maximum call depth exceeded in " + method.name);
  }
  auto env = std::make_shared<Environment>();
  env->slots.resize(method.frameSize, Value::uninitialized());
  const std::size_t arity = method.params.size();
  for (std::size_t i = 0; i < arity; ++i) env->slots[i] = std::move(argStack_[argBase + i]);
  argStack_.resize(argBase);
  env->parent = std::move(parent);
  env->self = std::move(self);
  for (std::size_t i = 0; i < arity; ++i) check(method.params[i].site, env->slots[i]);

  ++depth_;
  Value result;
  exec(method.body, env, result);
  --depth_;
  check(method.returnSite, result);
  return result;
}

Value Interpreter::applyBlock(const Value& block, std::size_t argBase, SourceLocation at) {
  const auto& data = block.asBlock();
  if (depth_ >= kMaxCallDepth) {
    argStack_.resize(argBase);
    runtimeError(at, "maximum call depth exceeded in block");
  }
  auto env = std::make_shared<Environment>();
  env->slots.resize(data.code->frameSize, Value::uninitialized());
  const std::size_t arity = data.arity();
  for (std::size_t i = 0; i < arity; ++i) env->slots[i] = std::move(argStack_[argBase + i]);
  argStack_.resize(argBase);
  env->parent = data.captured;
  env->self = data.captured ? data.captured->self : nullptr;
  ++depth_;
  Value result;
  exec(data.code->body, env, result);
  --depth_;
  return result;
}

}  // namespace gradual::interp

#include <cmath>

#include "gradual/frontend/printer.hpp"
#include "gradual/interp/interpreter.hpp"

namespace gradual::interp {

using frontend::SourceLocation;
using runtime::PrimOp;
using runtime::ValueKind;

namespace {

bool isIndex(double d) { return d >= 1 && std::floor(d) == d; }

}  // namespace

Value Interpreter::primitive(PrimOp op, const Value& receiver, std::size_t argBase, SourceLocation at) {
  if (op == PrimOp::BlockApply) return applyBlock(receiver, argBase, at);

  // Arguments are read in place and dropped on exit. Copy one before anything
  // that may run user code.
  struct Pop {
    std::vector<Value>& stack;
    std::size_t base;
    ~Pop() { stack.resize(base); }
  } pop{argStack_, argBase};
  const Value* args = argStack_.data() + argBase;

  auto number = [&](const Value& v) {
    if (!v.isNumber()) runtimeError(at, "expected a number, got " + std::string(runtime::toString(v.kind())));
    return v.asNumber();
  };
  auto boolean = [&](const Value& v) {
    if (v.kind() != ValueKind::Bool) {
      runtimeError(at, "expected a boolean, got " + std::string(runtime::toString(v.kind())));
    }
    return v.asBool();
  };
  auto index = [&](const Value& v, std::size_t size) {
    const double d = number(v);
    if (!isIndex(d) || d > static_cast<double>(size)) {
      runtimeError(at, "index " + frontend::formatNumber(d) + " out of bounds 1.." + std::to_string(size));
    }
    return static_cast<std::size_t>(d) - 1;
  };

  switch (op) {
    case PrimOp::NumAdd: return Value::number(receiver.asNumber() + number(args[0]));
    case PrimOp::NumSub: return Value::number(receiver.asNumber() - number(args[0]));
    case PrimOp::NumMul: return Value::number(receiver.asNumber() * number(args[0]));
    case PrimOp::NumDiv: return Value::number(receiver.asNumber() / number(args[0]));
    case PrimOp::NumMod: return Value::number(std::fmod(receiver.asNumber(), number(args[0])));
    case PrimOp::NumLt: return Value::boolean(receiver.asNumber() < number(args[0]));
    case PrimOp::NumGt: return Value::boolean(receiver.asNumber() > number(args[0]));
    case PrimOp::NumLe: return Value::boolean(receiver.asNumber() <= number(args[0]));
    case PrimOp::NumGe: return Value::boolean(receiver.asNumber() >= number(args[0]));
    case PrimOp::NumEq: return Value::boolean(args[0].isNumber() && receiver.asNumber() == args[0].asNumber());
    case PrimOp::NumNe: return Value::boolean(!(args[0].isNumber() && receiver.asNumber() == args[0].asNumber()));
    case PrimOp::NumAsString: return Value::string(frontend::formatNumber(receiver.asNumber()));
    case PrimOp::NumAbs: return Value::number(std::fabs(receiver.asNumber()));
    case PrimOp::NumSqrt: return Value::number(std::sqrt(receiver.asNumber()));
    case PrimOp::NumFloor: return Value::number(std::floor(receiver.asNumber()));

    case PrimOp::StrSize: return Value::number(static_cast<double>(receiver.asString().size()));
    case PrimOp::StrAt: {
      const auto& s = receiver.asString();
      return Value::string(std::string(1, s[index(args[0], s.size())]));
    }
    case PrimOp::StrEq:
      return Value::boolean(args[0].kind() == ValueKind::String && receiver.asString() == args[0].asString());
    case PrimOp::StrConcat: {
      Value arg = args[0];
      return Value::string(receiver.asString() + render(arg));
    }
    case PrimOp::StrAsString: return receiver;

    case PrimOp::ArrAt: {
      auto& elements = receiver.asArray().elements;
      return elements[index(args[0], elements.size())];
    }
    case PrimOp::ArrAtPut: {
      auto& elements = receiver.asArray().elements;
      elements[index(args[0], elements.size())] = args[1];
      return Value();
    }
    case PrimOp::ArrSize: return Value::number(static_cast<double>(receiver.asArray().elements.size()));

    case PrimOp::BoolAnd: return Value::boolean(receiver.asBool() && boolean(args[0]));
    case PrimOp::BoolOr: return Value::boolean(receiver.asBool() || boolean(args[0]));
    case PrimOp::BoolNot: return Value::boolean(!receiver.asBool());
    case PrimOp::BoolAsString: return Value::string(receiver.asBool() ? "true" : "false");

    case PrimOp::NilEq: return Value::boolean(args[0].isNil());
    case PrimOp::NilNe: return Value::boolean(!args[0].isNil());
    case PrimOp::NilAsString: return Value::string("nil");

    case PrimOp::BlockApply: break;
  }
  runtimeError(at, "unknown primitive");
}

}  // namespace gradual::interp

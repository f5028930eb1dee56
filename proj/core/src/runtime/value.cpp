#include "gradual/runtime/value.hpp"

namespace gradual::runtime {

std::string_view toString(ValueKind kind) {
  switch (kind) {
    case ValueKind::Nil: return "Nil";
    case ValueKind::Bool: return "Bool";
    case ValueKind::Number: return "Number";
    case ValueKind::String: return "String";
    case ValueKind::Array: return "Array";
    case ValueKind::Block: return "Block";
    case ValueKind::Object: return "Object";
    case ValueKind::Uninitialized: return "Uninitialized";
  }
  return "?";
}

bool Value::identical(const Value& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case ValueKind::Nil:
    case ValueKind::Uninitialized: return true;
    case ValueKind::Bool: return bool_ == other.bool_;
    case ValueKind::Number: return number_ == other.number_;
    case ValueKind::String: return asString() == other.asString();
    default: return ref_ == other.ref_;
  }
}

}  // namespace gradual::runtime

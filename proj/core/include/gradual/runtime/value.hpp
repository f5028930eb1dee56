#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gradual/frontend/ast.hpp"

namespace gradual::runtime {

class Shape;
struct Environment;

enum class ValueKind : std::uint8_t { Nil, Bool, Number, String, Array, Block, Object, Uninitialized };

std::string_view toString(ValueKind kind);

class Value;

struct ArrayData {
  std::vector<Value> elements;  // length fixed at creation
};

struct BlockData {
  const frontend::BlockLiteral* code = nullptr;
  std::shared_ptr<Environment> captured;
  std::uint32_t arity() const { return static_cast<std::uint32_t>(code->params.size()); }
};

struct ObjectInstance {
  const Shape* shape = nullptr;
  const frontend::ObjectLiteral* literal = nullptr;  // source of method bodies
  std::vector<Value> fields;                          // indexed per shape layout
  std::shared_ptr<Environment> outer;                 // environment the literal was evaluated in
};

/// Tagged run-time value. Heap kinds share ownership of their payload.
class Value {
 public:
  Value() = default;

  static Value boolean(bool b) {
    Value v(ValueKind::Bool);
    v.bool_ = b;
    return v;
  }
  static Value number(double n) {
    Value v(ValueKind::Number);
    v.number_ = n;
    return v;
  }
  static Value string(std::string s) {
    Value v(ValueKind::String);
    v.ref_ = std::make_shared<std::string>(std::move(s));
    return v;
  }
  static Value array(std::shared_ptr<ArrayData> a) {
    Value v(ValueKind::Array);
    v.ref_ = std::move(a);
    return v;
  }
  static Value block(std::shared_ptr<BlockData> b) {
    Value v(ValueKind::Block);
    v.ref_ = std::move(b);
    return v;
  }
  static Value object(std::shared_ptr<ObjectInstance> o) {
    Value v(ValueKind::Object);
    v.ref_ = std::move(o);
    return v;
  }
  // Marks a declared but never written variable; never escapes a variable read.
  static Value uninitialized() { return Value(ValueKind::Uninitialized); }

  ValueKind kind() const { return kind_; }
  bool isNil() const { return kind_ == ValueKind::Nil; }
  bool isNumber() const { return kind_ == ValueKind::Number; }
  bool isUninitialized() const { return kind_ == ValueKind::Uninitialized; }

  bool asBool() const { return bool_; }
  double asNumber() const { return number_; }
  const std::string& asString() const { return *static_cast<const std::string*>(ref_.get()); }
  ArrayData& asArray() const { return *static_cast<ArrayData*>(ref_.get()); }
  BlockData& asBlock() const { return *static_cast<BlockData*>(ref_.get()); }
  ObjectInstance& asObject() const { return *static_cast<ObjectInstance*>(ref_.get()); }
  std::shared_ptr<ObjectInstance> objectRef() const { return std::static_pointer_cast<ObjectInstance>(ref_); }

  // Identity of heap values, value equality of numbers, strings, booleans and nil.
  bool identical(const Value& other) const;

 private:
  explicit Value(ValueKind k) : kind_(k) {}

  ValueKind kind_ = ValueKind::Nil;
  union {
    bool bool_;
    double number_ = 0.0;
  };
  std::shared_ptr<void> ref_;
};

}  // namespace gradual::runtime

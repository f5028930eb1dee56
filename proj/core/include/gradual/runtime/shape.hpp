#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gradual/frontend/ast.hpp"
#include "gradual/runtime/value.hpp"

namespace gradual::runtime {

using frontend::MemberSig;

enum class PrimOp : std::uint8_t {
  NumAdd, NumSub, NumMul, NumDiv, NumMod,
  NumLt, NumGt, NumLe, NumGe, NumEq, NumNe,
  NumAsString, NumAbs, NumSqrt, NumFloor,
  StrSize, StrAt, StrEq, StrConcat, StrAsString,
  ArrAt, ArrAtPut, ArrSize,
  BoolAnd, BoolOr, BoolNot, BoolAsString,
  NilEq, NilNe, NilAsString,
  BlockApply,
};

enum class MemberKind : std::uint8_t { Method, Reader, Writer, Primitive };

/// What a (name, arity) lookup on a shape yields.
struct MemberRef {
  MemberKind kind;
  std::uint32_t index;  // method index in the literal, field slot, or PrimOp
};

struct ShapeMember {
  MemberSig sig;
  Symbol symbol;
  MemberRef ref;
};

/// Immutable descriptor of an object's member set and field layout. Shapes are
/// compared by identity; equal identity implies equal member sets.
class Shape {
 public:
  Shape(std::uint32_t id, ValueKind kind, std::vector<ShapeMember> members, std::uint32_t fieldCount,
        std::vector<std::string> fieldNames);

  std::uint32_t id() const { return id_; }
  ValueKind kind() const { return kind_; }

  /// Member set in canonical (name, arity) order.
  const std::vector<MemberSig>& members() const { return memberSet_; }
  const std::vector<ShapeMember>& entries() const { return entries_; }
  std::uint32_t fieldCount() const { return fieldCount_; }

  /// Slot of a field (public or confidential) by name.
  std::optional<std::uint32_t> slotOf(std::string_view field) const;

  const MemberRef* lookup(Symbol name, std::uint32_t arity) const {
    auto it = table_.find(key(name, arity));
    return it == table_.end() ? nullptr : &it->second;
  }
  const MemberRef* lookup(std::string_view name, std::uint32_t arity) const {
    return lookup(intern(name), arity);
  }

  /// Renders the member set as an interface literal, e.g. `interface { name, name:=(_) }`.
  std::string describe() const;

 private:
  static std::uint64_t key(Symbol name, std::uint32_t arity) {
    return (static_cast<std::uint64_t>(name) << 32) | arity;
  }

  std::uint32_t id_;
  ValueKind kind_;
  std::vector<ShapeMember> entries_;
  std::vector<MemberSig> memberSet_;
  std::uint32_t fieldCount_;
  std::vector<std::string> fieldNames_;
  std::unordered_map<std::uint64_t, MemberRef> table_;
};

/// Owns every shape of one interpreter instance. Object-literal shapes are
/// canonicalized by their ordered member layout, so literals declaring the
/// same members in the same order share one shape. Primitive kinds each have
/// a singleton shape; blocks have one shape per arity.
class ShapeTable {
 public:
  ShapeTable();
  ShapeTable(const ShapeTable&) = delete;
  ShapeTable& operator=(const ShapeTable&) = delete;

  const Shape& forLiteral(const frontend::ObjectLiteral& literal);
  const Shape& primitive(ValueKind kind) const;
  const Shape& forBlock(std::uint32_t arity);
  const Shape& shapeOf(const Value& value);

  std::size_t size() const { return shapes_.size(); }

 private:
  const Shape& add(ValueKind kind, std::vector<ShapeMember> members, std::uint32_t fieldCount,
                   std::vector<std::string> fieldNames);

  std::deque<std::unique_ptr<Shape>> shapes_;
  std::unordered_map<std::string, const Shape*> canonical_;
  std::vector<const Shape*> literalCache_;  // by literal id
  std::vector<const Shape*> blockShapes_;   // by arity
  const Shape* primitives_[5] = {};         // Nil, Bool, Number, String, Array
};

}  // namespace gradual::runtime

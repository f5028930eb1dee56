#include "gradual/runtime/shape.hpp"

#include <algorithm>
#include <stdexcept>

namespace gradual::runtime {
namespace {

struct PrimitiveMember {
  const char* name;
  std::uint32_t arity;
  PrimOp op;
};

constexpr PrimitiveMember kNumberMembers[] = {
    {"+", 1, PrimOp::NumAdd},   {"-", 1, PrimOp::NumSub},  {"*", 1, PrimOp::NumMul},
    {"/", 1, PrimOp::NumDiv},   {"%", 1, PrimOp::NumMod},  {"<", 1, PrimOp::NumLt},
    {">", 1, PrimOp::NumGt},    {"<=", 1, PrimOp::NumLe},  {">=", 1, PrimOp::NumGe},
    {"==", 1, PrimOp::NumEq},   {"!=", 1, PrimOp::NumNe},  {"asString", 0, PrimOp::NumAsString},
    {"abs", 0, PrimOp::NumAbs}, {"sqrt", 0, PrimOp::NumSqrt}, {"floor", 0, PrimOp::NumFloor},
};

constexpr PrimitiveMember kStringMembers[] = {
    {"size", 0, PrimOp::StrSize}, {"at", 1, PrimOp::StrAt},           {"==", 1, PrimOp::StrEq},
    {"+", 1, PrimOp::StrConcat},  {"asString", 0, PrimOp::StrAsString},
};

constexpr PrimitiveMember kArrayMembers[] = {
    {"at", 1, PrimOp::ArrAt}, {"atPut", 2, PrimOp::ArrAtPut}, {"size", 0, PrimOp::ArrSize},
};

constexpr PrimitiveMember kBoolMembers[] = {
    {"&&", 1, PrimOp::BoolAnd}, {"||", 1, PrimOp::BoolOr}, {"not", 0, PrimOp::BoolNot},
    {"asString", 0, PrimOp::BoolAsString},
};

constexpr PrimitiveMember kNilMembers[] = {
    {"==", 1, PrimOp::NilEq}, {"!=", 1, PrimOp::NilNe}, {"asString", 0, PrimOp::NilAsString},
};

template <std::size_t N>
std::vector<ShapeMember> primitiveMembers(const PrimitiveMember (&table)[N]) {
  std::vector<ShapeMember> out;
  for (const auto& m : table) {
    out.push_back({{m.name, m.arity}, intern(m.name),
                   {MemberKind::Primitive, static_cast<std::uint32_t>(m.op)}});
  }
  return out;
}

int primitiveIndex(ValueKind kind) {
  switch (kind) {
    case ValueKind::Nil: return 0;
    case ValueKind::Bool: return 1;
    case ValueKind::Number: return 2;
    case ValueKind::String: return 3;
    case ValueKind::Array: return 4;
    default: return -1;
  }
}

}  // namespace

Shape::Shape(std::uint32_t id, ValueKind kind, std::vector<ShapeMember> members, std::uint32_t fieldCount,
             std::vector<std::string> fieldNames)
    : id_(id), kind_(kind), entries_(std::move(members)), fieldCount_(fieldCount), fieldNames_(std::move(fieldNames)) {
  for (const auto& m : entries_) {
    memberSet_.push_back(m.sig);
    table_.emplace(key(m.symbol, m.sig.arity), m.ref);
  }
  std::sort(memberSet_.begin(), memberSet_.end());
}

std::optional<std::uint32_t> Shape::slotOf(std::string_view field) const {
  for (std::uint32_t i = 0; i < fieldNames_.size(); ++i) {
    if (fieldNames_[i] == field) return i;
  }
  return std::nullopt;
}

std::string Shape::describe() const {
  std::string out = "interface {";
  for (std::size_t i = 0; i < memberSet_.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += frontend::formatMember(memberSet_[i]);
  }
  out += memberSet_.empty() ? "}" : " }";
  return out;
}

ShapeTable::ShapeTable() {
  primitives_[0] = &add(ValueKind::Nil, primitiveMembers(kNilMembers), 0, {});
  primitives_[1] = &add(ValueKind::Bool, primitiveMembers(kBoolMembers), 0, {});
  primitives_[2] = &add(ValueKind::Number, primitiveMembers(kNumberMembers), 0, {});
  primitives_[3] = &add(ValueKind::String, primitiveMembers(kStringMembers), 0, {});
  primitives_[4] = &add(ValueKind::Array, primitiveMembers(kArrayMembers), 0, {});
}

const Shape& ShapeTable::add(ValueKind kind, std::vector<ShapeMember> members, std::uint32_t fieldCount,
                             std::vector<std::string> fieldNames) {
  const auto id = static_cast<std::uint32_t>(shapes_.size());
  shapes_.push_back(std::make_unique<Shape>(id, kind, std::move(members), fieldCount, std::move(fieldNames)));
  return *shapes_.back();
}

const Shape& ShapeTable::primitive(ValueKind kind) const {
  const int index = primitiveIndex(kind);
  if (index < 0) throw std::logic_error("no singleton shape for this value kind");
  return *primitives_[index];
}

const Shape& ShapeTable::forBlock(std::uint32_t arity) {
  if (arity >= blockShapes_.size()) blockShapes_.resize(arity + 1, nullptr);
  if (blockShapes_[arity] == nullptr) {
    std::vector<ShapeMember> members{
        {{"apply", arity}, intern("apply"), {MemberKind::Primitive, static_cast<std::uint32_t>(PrimOp::BlockApply)}}};
    blockShapes_[arity] = &add(ValueKind::Block, std::move(members), 0, {});
  }
  return *blockShapes_[arity];
}

const Shape& ShapeTable::forLiteral(const frontend::ObjectLiteral& literal) {
  if (literal.literalId < literalCache_.size() && literalCache_[literal.literalId] != nullptr) {
    return *literalCache_[literal.literalId];
  }
  // The canonical key is the ordered layout: field kind, visibility and name,
  // then method signatures, exactly as declared.
  std::string key;
  std::vector<ShapeMember> members;
  std::vector<std::string> fieldNames;
  std::uint32_t methodIndex = 0;
  for (const auto& m : literal.members) {
    if (m->kind == frontend::NodeKind::VarDecl) {
      const auto& var = frontend::as<frontend::VarDecl>(*m);
      key += var.isDef ? 'd' : 'v';
      key += var.isPublic ? '+' : '-';
      key += var.name;
      key += ';';
      const auto slot = static_cast<std::uint32_t>(fieldNames.size());
      fieldNames.push_back(var.name);
      if (var.isPublic) {
        members.push_back({{var.name, 0}, intern(var.name), {MemberKind::Reader, slot}});
        if (!var.isDef) {
          const std::string writer = var.name + ":=";
          members.push_back({{writer, 1}, intern(writer), {MemberKind::Writer, slot}});
        }
      }
    } else {
      const auto& method = frontend::as<frontend::MethodDecl>(*m);
      key += 'm';
      key += method.name;
      key += '/';
      key += std::to_string(method.arity());
      key += ';';
      members.push_back({{method.name, method.arity()}, intern(method.name), {MemberKind::Method, methodIndex++}});
    }
  }
  const Shape* shape = nullptr;
  if (auto it = canonical_.find(key); it != canonical_.end()) {
    shape = it->second;
  } else {
    const auto fieldCount = static_cast<std::uint32_t>(fieldNames.size());
    shape = &add(ValueKind::Object, std::move(members), fieldCount, std::move(fieldNames));
    canonical_.emplace(std::move(key), shape);
  }
  if (literal.literalId >= literalCache_.size()) literalCache_.resize(literal.literalId + 1, nullptr);
  literalCache_[literal.literalId] = shape;
  return *shape;
}

const Shape& ShapeTable::shapeOf(const Value& value) {
  switch (value.kind()) {
    case ValueKind::Object: return *value.asObject().shape;
    case ValueKind::Block: return forBlock(value.asBlock().arity());
    case ValueKind::Uninitialized: return primitive(ValueKind::Nil);
    default: return primitive(value.kind());
  }
}

}  // namespace gradual::runtime

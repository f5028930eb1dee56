#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <unordered_map>
#include <vector>

#include "gradual/frontend/ast.hpp"

namespace gradual::types {

using frontend::MemberSig;
using TypeId = std::uint32_t;

/// Id of the distinguished Unknown type in every interner.
inline constexpr TypeId kUnknownType = 0;

struct StructuralType {
  TypeId id = kUnknownType;
  std::vector<MemberSig> members;  // sorted by (name, arity), no duplicates
  bool unknown = false;
};

/// Canonical handles for member sets: equal sets yield the identical type.
class TypeInterner {
 public:
  TypeInterner();
  TypeInterner(const TypeInterner&) = delete;
  TypeInterner& operator=(const TypeInterner&) = delete;

  const StructuralType& unknown() const { return *types_.front(); }

  /// Accepts members in any order and with duplicates.
  const StructuralType& intern(std::vector<MemberSig> members);
  const StructuralType& intern(const frontend::TypeDecl& decl);

  const StructuralType& get(TypeId id) const { return *types_.at(id); }
  std::size_t size() const { return types_.size(); }

 private:
  std::deque<std::unique_ptr<StructuralType>> types_;
  std::map<std::vector<MemberSig>, TypeId> byMembers_;
  std::unordered_map<const frontend::TypeDecl*, TypeId> byDecl_;
};

/// True iff every member of `expected` is a member of `subject`. Unknown as
/// `expected` accepts every subject.
bool isSatisfiedBy(const StructuralType& expected, const StructuralType& subject);

}  // namespace gradual::types

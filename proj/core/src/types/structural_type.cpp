#include "gradual/types/structural_type.hpp"

#include <algorithm>

namespace gradual::types {

TypeInterner::TypeInterner() {
  auto unknown = std::make_unique<StructuralType>();
  unknown->unknown = true;
  types_.push_back(std::move(unknown));
}

const StructuralType& TypeInterner::intern(std::vector<MemberSig> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (auto it = byMembers_.find(members); it != byMembers_.end()) return *types_[it->second];
  const auto id = static_cast<TypeId>(types_.size());
  auto type = std::make_unique<StructuralType>();
  type->id = id;
  type->members = members;
  types_.push_back(std::move(type));
  byMembers_.emplace(std::move(members), id);
  return *types_.back();
}

const StructuralType& TypeInterner::intern(const frontend::TypeDecl& decl) {
  if (auto it = byDecl_.find(&decl); it != byDecl_.end()) return *types_[it->second];
  const StructuralType& type = intern(decl.members);
  byDecl_.emplace(&decl, type.id);
  return type;
}

bool isSatisfiedBy(const StructuralType& expected, const StructuralType& subject) {
  if (expected.unknown) return true;
  if (subject.unknown) return expected.members.empty();
  return std::includes(subject.members.begin(), subject.members.end(), expected.members.begin(),
                       expected.members.end());
}

}  // namespace gradual::types

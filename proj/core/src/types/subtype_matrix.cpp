#include "gradual/types/subtype_matrix.hpp"

namespace gradual::types {

Cell SubtypeMatrix::cell(TypeId subject, TypeId expected) const {
  auto it = cells_.find(key(subject, expected));
  if (it == cells_.end()) return Cell::Unknown;
  return it->second ? Cell::True : Cell::False;
}

bool SubtypeMatrix::query(const StructuralType& subject, const StructuralType& expected, bool enabled,
                          stats::StatsRegistry& stats) {
  if (!enabled) {
    ++stats.global().isSubtypeOf;
    return isSatisfiedBy(expected, subject);
  }
  auto [it, inserted] = cells_.try_emplace(key(subject.id, expected.id), false);
  if (inserted) {
    ++stats.global().isSubtypeOf;
    it->second = isSatisfiedBy(expected, subject);
  } else {
    ++stats.global().matrixHits;
  }
  return it->second;
}

const StructuralType& TypeContext::typeOfShape(const runtime::Shape& shape) {
  if (shape.id() >= shapeTypes_.size()) shapeTypes_.resize(shape.id() + 1, nullptr);
  const StructuralType*& slot = shapeTypes_[shape.id()];
  if (slot == nullptr) slot = &interner_.intern(shape.members());
  return *slot;
}

}  // namespace gradual::types

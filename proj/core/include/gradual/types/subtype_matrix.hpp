#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gradual/runtime/shape.hpp"
#include "gradual/stats/stats_registry.hpp"
#include "gradual/types/structural_type.hpp"

namespace gradual::types {

enum class Cell : std::uint8_t { Unknown, True, False };

/// Memo of (subject, expected) -> satisfaction, grown on demand. A cell never
/// changes once decided.
class SubtypeMatrix {
 public:
  Cell cell(TypeId subject, TypeId expected) const;

  /// With `enabled`, computes and stores unknown cells and answers decided
  /// ones from memory; the is_subtype_of counter moves only on computation.
  /// Without it, always computes and neither reads nor writes cells.
  bool query(const StructuralType& subject, const StructuralType& expected, bool enabled,
             stats::StatsRegistry& stats);

  std::size_t knownCells() const { return cells_.size(); }

  template <typename Fn>
  void forEachCell(Fn&& fn) const {
    for (const auto& [key, value] : cells_) {
      fn(static_cast<TypeId>(key >> 32), static_cast<TypeId>(key & 0xffffffffu), value);
    }
  }

 private:
  static std::uint64_t key(TypeId subject, TypeId expected) {
    return (static_cast<std::uint64_t>(subject) << 32) | expected;
  }

  std::unordered_map<std::uint64_t, bool> cells_;
};

/// Type state of one interpreter: the interner, the matrix and the memo from
/// shapes to their structural types.
class TypeContext {
 public:
  TypeInterner& interner() { return interner_; }
  const TypeInterner& interner() const { return interner_; }
  SubtypeMatrix& matrix() { return matrix_; }
  const SubtypeMatrix& matrix() const { return matrix_; }

  const StructuralType& typeOfShape(const runtime::Shape& shape);

 private:
  TypeInterner interner_;
  SubtypeMatrix matrix_;
  std::vector<const StructuralType*> shapeTypes_;  // by shape id
};

}  // namespace gradual::types

#include "gradual/checks/check_site.hpp"

namespace gradual::checks {

using runtime::Value;
using runtime::ValueKind;

Specialization Specialization::forValue(const Value& value) {
  Specialization s;
  s.kind = value.kind();
  if (s.kind == ValueKind::Object) s.shape = value.asObject().shape;
  if (s.kind == ValueKind::Block) s.arity = value.asBlock().arity();
  return s;
}

CheckSite::CheckSite(frontend::SiteId id, frontend::SiteKind kind, const types::StructuralType& expected,
                     std::string expectedDescription, std::string file, frontend::SourceLocation location)
    : id_(id),
      kind_(kind),
      expected_(&expected),
      expectedDescription_(std::move(expectedDescription)),
      file_(std::move(file)),
      location_(location) {}

void CheckSite::perform(const Value& value, runtime::ShapeTable& shapes, types::TypeContext& types,
                        stats::StatsRegistry& stats) {
  static const Value nil;
  const Value& v = value.isUninitialized() ? nil : value;
  auto& counters = stats.site(id_);
  ++counters.executions;
  if (!stats.config().nodeOpt) {
    if (!checkGeneric(v, shapes, types, stats)) fail(v, shapes);
    return;
  }
  if (!megamorphic_) {
    for (const auto& s : states_) {
      if (s.matches(v)) {
        ++counters.fastHits;
        return;
      }
    }
  }
  if (!checkGeneric(v, shapes, types, stats)) fail(v, shapes);
  if (megamorphic_) return;
  if (states_.size() == kCacheDepthLimit) {
    states_.clear();
    megamorphic_ = true;
    return;
  }
  states_.push_back(Specialization::forValue(v));
}

bool CheckSite::checkGeneric(const Value& value, runtime::ShapeTable& shapes, types::TypeContext& types,
                             stats::StatsRegistry& stats) const {
  ++stats.site(id_).checkGeneric;
  const types::StructuralType& subject = types.typeOfShape(shapes.shapeOf(value));
  stats.recordTypePair(subject.id, expected_->id);
  return types.matrix().query(subject, *expected_, stats.config().matrixOpt, stats);
}

void CheckSite::fail(const Value& value, runtime::ShapeTable& shapes) const {
  throw TypeError(id_, file_, location_,
                  shapes.shapeOf(value).describe() + " doesn't implement " + expectedDescription_);
}

}  // namespace gradual::checks

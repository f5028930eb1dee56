#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradual/frontend/ast.hpp"
#include "gradual/runtime/shape.hpp"
#include "gradual/runtime/value.hpp"
#include "gradual/stats/stats_registry.hpp"
#include "gradual/types/subtype_matrix.hpp"

namespace gradual::checks {

inline constexpr std::size_t kCacheDepthLimit = 8;

/// Guard of one activated fast path: a primitive kind, a block arity, or an
/// object shape compared by identity.
struct Specialization {
  runtime::ValueKind kind = runtime::ValueKind::Nil;
  std::uint32_t arity = 0;                  // blocks only
  const runtime::Shape* shape = nullptr;    // objects only

  static Specialization forValue(const runtime::Value& value);

  bool matches(const runtime::Value& value) const {
    if (value.kind() != kind) return false;
    switch (kind) {
      case runtime::ValueKind::Object: return value.asObject().shape == shape;
      case runtime::ValueKind::Block: return value.asBlock().arity() == arity;
      default: return true;
    }
  }

  friend bool operator==(const Specialization&, const Specialization&) = default;
};

class TypeError : public std::runtime_error {
 public:
  TypeError(frontend::SiteId site, std::string file, frontend::SourceLocation location, const std::string& message)
      : std::runtime_error(message), site_(site), file_(std::move(file)), location_(location) {}

  frontend::SiteId site() const { return site_; }
  const std::string& file() const { return file_; }
  frontend::SourceLocation location() const { return location_; }

 private:
  frontend::SiteId site_;
  std::string file_;
  frontend::SourceLocation location_;
};

/// Self-specializing type test attached to one lexical check point.
class CheckSite {
 public:
  CheckSite(frontend::SiteId id, frontend::SiteKind kind, const types::StructuralType& expected,
            std::string expectedDescription, std::string file, frontend::SourceLocation location);

  frontend::SiteId id() const { return id_; }
  frontend::SiteKind kind() const { return kind_; }
  const types::StructuralType& expected() const { return *expected_; }
  const std::string& expectedDescription() const { return expectedDescription_; }
  const std::string& file() const { return file_; }
  frontend::SourceLocation location() const { return location_; }

  const std::vector<Specialization>& states() const { return states_; }
  bool megamorphic() const { return megamorphic_; }

  /// Runs the check under the registry's configuration. Throws TypeError on
  /// failure and leaves the site state unchanged.
  void perform(const runtime::Value& value, runtime::ShapeTable& shapes, types::TypeContext& types,
               stats::StatsRegistry& stats);

  /// The full test; counts one check_generic.
  bool checkGeneric(const runtime::Value& value, runtime::ShapeTable& shapes, types::TypeContext& types,
                    stats::StatsRegistry& stats) const;

 private:
  [[noreturn]] void fail(const runtime::Value& value, runtime::ShapeTable& shapes) const;

  frontend::SiteId id_;
  frontend::SiteKind kind_;
  const types::StructuralType* expected_;
  std::string expectedDescription_;
  std::string file_;
  frontend::SourceLocation location_;
  std::vector<Specialization> states_;
  bool megamorphic_ = false;
};

}  // namespace gradual::checks

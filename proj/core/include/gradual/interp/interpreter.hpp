#pragma once

#include <functional>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradual/checks/check_site.hpp"
#include "gradual/frontend/ast.hpp"
#include "gradual/interp/environment.hpp"
#include "gradual/interp/exit_status.hpp"
#include "gradual/runtime/shape.hpp"
#include "gradual/runtime/value.hpp"
#include "gradual/stats/stats_registry.hpp"
#include "gradual/types/subtype_matrix.hpp"

namespace gradual::interp {

using runtime::Value;
using EnvPtr = std::shared_ptr<runtime::Environment>;

/// Called for every check about to execute, before the check runs.
using CheckObserver = std::function<void(const frontend::SiteInfo& site, const Value& value)>;

class DoesNotUnderstand : public std::runtime_error {
 public:
  DoesNotUnderstand(std::string file, frontend::SourceLocation location, const std::string& message)
      : std::runtime_error(message), file_(std::move(file)), location_(location) {}
  const std::string& file() const { return file_; }
  frontend::SourceLocation location() const { return location_; }

 private:
  std::string file_;
  frontend::SourceLocation location_;
};

class RuntimeError : public std::runtime_error {
 public:
  RuntimeError(std::string file, frontend::SourceLocation location, const std::string& message)
      : std::runtime_error(message), file_(std::move(file)), location_(location) {}
  const std::string& file() const { return file_; }
  frontend::SourceLocation location() const { return location_; }

 private:
  std::string file_;
  frontend::SourceLocation location_;
};

inline constexpr std::size_t kMaxCallDepth = 2000;

/// Tree-walking evaluator for one resolved program. Owns all run-time state
/// (shapes, types, check sites, inline caches); the Program is only read.
class Interpreter {
 public:
  Interpreter(const frontend::Program& program, stats::StatsRegistry& stats, std::ostream& out);
  Interpreter(const Interpreter&) = delete;
  Interpreter& operator=(const Interpreter&) = delete;

  /// Executes the top-level statements once.
  ExitStatus load();

  /// Requests a zero-argument top-level method. Requires a prior load().
  /// `rendered` receives the result's asString.
  ExitStatus call(std::string_view method, Value* result = nullptr, std::string* rendered = nullptr);

  void setCheckObserver(CheckObserver observer) { observer_ = std::move(observer); }

  const frontend::Program& program() const { return program_; }
  const checks::CheckSite& site(frontend::SiteId id) const { return sites_.at(id); }
  std::size_t siteCount() const { return sites_.size(); }
  runtime::ShapeTable& shapes() { return shapes_; }
  types::TypeContext& types() { return types_; }
  stats::StatsRegistry& stats() { return stats_; }

  /// The asString of a value; requests `asString` on user objects that define it.
  std::string render(const Value& value);

 private:
  enum class Flow : std::uint8_t { Normal, Return };

  template <typename Fn>
  ExitStatus guarded(Fn&& fn);
  void syncGlobals();

  Flow exec(const frontend::NodeList& body, const EnvPtr& env, Value& last);
  Flow execStatement(const frontend::Node& node, const EnvPtr& env, Value& last);
  Value eval(const frontend::Node& node, const EnvPtr& env);
  Value evalImplicit(const frontend::ImplicitRequest& req, const EnvPtr& env);
  Value evalExplicit(const frontend::ExplicitRequest& req, const EnvPtr& env);
  Value evalIf(const frontend::If& node, const EnvPtr& env, Flow& flow);
  void evalWhile(const frontend::While& node, const EnvPtr& env, Flow& flow, Value& last);
  Value instantiate(const frontend::ObjectLiteral& literal, const EnvPtr& env);
  Value makeBlock(const frontend::BlockLiteral& literal, const EnvPtr& env);

  // Arguments are on argStack_ from argBase to the top; both consume them.
  Value invoke(const frontend::MethodDecl& method, std::shared_ptr<runtime::ObjectInstance> self,
               EnvPtr parent, std::size_t argBase, frontend::SourceLocation at);
  Value applyBlock(const Value& block, std::size_t argBase, frontend::SourceLocation at);
  Value primitive(runtime::PrimOp op, const Value& receiver, std::size_t argBase, frontend::SourceLocation at);

  bool truthy(const Value& value, frontend::SourceLocation at) const;
  void check(frontend::SiteId id, const Value& value);
  static runtime::Environment& frameAt(const EnvPtr& env, std::uint32_t hops);
  [[noreturn]] void runtimeError(frontend::SourceLocation at, const std::string& message) const;

  struct InlineCache {
    const runtime::Shape* shape = nullptr;
    runtime::MemberRef member{runtime::MemberKind::Primitive, 0};
  };

  const frontend::Program& program_;
  stats::StatsRegistry& stats_;
  std::ostream& out_;
  runtime::ShapeTable shapes_;
  types::TypeContext types_;
  std::vector<checks::CheckSite> sites_;
  std::vector<InlineCache> caches_;
  std::vector<Value> argStack_;
  EnvPtr module_;
  CheckObserver observer_;
  std::size_t depth_ = 0;
  bool loaded_ = false;
};

/// Executes the top-level statements of a resolved program.
ExitStatus run(const frontend::Program& program, stats::StatsRegistry& stats, std::ostream& out);

}  // namespace gradual::interp

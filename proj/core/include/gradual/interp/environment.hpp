#pragma once

#include <memory>
#include <vector>

#include "gradual/runtime/value.hpp"

namespace gradual::runtime {

/// One activation frame: a method, block, object initializer or the module.
/// Names are resolved to (hops, slot) pairs ahead of time, so a frame is a
/// plain slot vector plus its lexical parent.
struct Environment {
  std::vector<Value> slots;
  std::shared_ptr<Environment> parent;
  std::shared_ptr<ObjectInstance> self;  // set on frames nested directly in an object
};

}  // namespace gradual::runtime

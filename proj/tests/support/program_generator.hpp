#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gradual/frontend/ast.hpp"

namespace gradual::fixtures {

/// Small random programs mixing typed and untyped code: object factories,
/// annotated methods and variables, loops that vary the shapes flowing
/// through each check point, occasional type errors and failed lookups.
/// Every program terminates.
std::string generateProgram(std::uint64_t seed);

/// Random member set over a small fixed pool of signatures.
std::vector<frontend::MemberSig> randomMembers(std::mt19937_64& rng, std::size_t maxSize);

/// The pool randomMembers draws from.
const std::vector<frontend::MemberSig>& memberPool();

}  // namespace gradual::fixtures

#pragma once

#include "glmn/weight.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace glmn::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

// Expands "0..2,0,-1" into the cartesian grid of coefficient lists.
std::vector<std::vector<std::int64_t>> parse_weight_spec(const std::string& spec);

// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace glmn::cli

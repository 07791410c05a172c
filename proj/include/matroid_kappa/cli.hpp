#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mkappa {

inline constexpr const char* kJsonSchema = "matroid-kappa/1";

// Exit codes: 0 success, 1 domain/precondition/parse error, 2 budget
// exceeded, 3 internal invariant failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mkappa

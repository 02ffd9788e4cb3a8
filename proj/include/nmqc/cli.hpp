#pragma once

#include <string>
#include <vector>

namespace nmqc {

// Exit codes: 0 ok, 2 argument or parse error, 3 verification failure,
// 4 resource cap hit, 5 expectation mismatch.
int run_cli(const std::vector<std::string>& args);

}  // namespace nmqc

#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace repstrata::cli {

// exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource refusal (enumeration budget)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace repstrata::cli

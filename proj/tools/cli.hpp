#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strtop::cli {

// exit codes: 0 ok, 1 failed check or refused computation, 2 usage or input error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strtop::cli

#pragma once

#include <ostream>

namespace nilseries::cli {

// Exit codes: 0 ok, 1 verification failure, 2 usage or data error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilseries::cli

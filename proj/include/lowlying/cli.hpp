#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace lowlying::cli {

/// Exit codes: 0 success, 1 failed verification, 2 usage or parameter error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lowlying::cli

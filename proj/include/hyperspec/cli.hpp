#pragma once

#include <iosfwd>

namespace hyperspec {

/// Exit codes: 0 ok, 2 input/parse, 3 caps, 4 math precondition, 1 other.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperspec

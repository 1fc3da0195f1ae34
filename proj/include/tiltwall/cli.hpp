#pragma once

#include <iosfwd>

namespace tiltwall {

/// Exit codes: 0 success, 1 validation or check failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tiltwall

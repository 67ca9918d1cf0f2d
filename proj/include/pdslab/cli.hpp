#pragma once

#include <ostream>

namespace pdslab {

/// Exit codes: 0 pass, 1 mathematical failure (a witness is printed), 2 usage or format error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdslab

#pragma once

#include <iosfwd>

namespace mwf::cli {

/// Entry point shared by the `mwf` binary and the tests.
///
/// Exit codes: 0 success, 2 invalid input / infeasible design / bind
/// failure, 1 internal fault.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mwf::cli

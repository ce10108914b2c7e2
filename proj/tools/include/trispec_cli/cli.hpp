#pragma once

#include <iosfwd>

namespace trispec::cli {

enum ExitCode : int {
    kOk = 0,
    kArgumentError = 2,
    kNumericalFailure = 3,
    kValidationFailure = 4,
};

/// Parse argv and run one of scan / roots / flow / validate. Results go to --out when
/// given, otherwise to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace trispec::cli

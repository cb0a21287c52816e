#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcpoly::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidInput = 1,
    kAccuracyFailure = 2,
};

/*!
 * Runs one lcpoly command line. Artifacts go to `out` unless --out names a
 * file; diagnostics go to `err`. Returns 0 on success, 1 for invalid input
 * and 2 when a numerical budget is exhausted.
 */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

//! Same as above; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcpoly::cli

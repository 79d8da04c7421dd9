#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfa {

/// Entry point behind the qfa binary; args excludes the program name.
/// Returns the process exit code: 0 success or verification passed,
/// 1 verification failed, 2 bad input (flags or machine file),
/// 3 machine invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfa

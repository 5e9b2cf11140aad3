// The `sgx` command line tool, callable in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgx::cli {

//! Exit statuses; part of the tool's interface.
enum ExitCode : int {
    kOk          = 0,
    kParseError  = 1, // malformed input file or arguments
    kCapExceeded = 2,
    kNotAModel   = 3,
    kAtomMissing = 4,
    kNotStable   = 5,
    kViolation   = 6,
};

//! Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sgx::cli

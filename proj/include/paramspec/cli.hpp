#ifndef PARAMSPEC_CLI_HPP
#define PARAMSPEC_CLI_HPP

#include <string>
#include <vector>

namespace paramspec {

/// Command-line entry point. Exit codes: 0 success, 1 usage error, 2
/// document parse/validation error, 3 numeric non-convergence, 4 capability
/// limit. Messages go to stderr; data goes to stdout or --output.
int run(int argc, const char* const* argv);

/// Test-friendly overload: arguments without the program name.
int run(const std::vector<std::string>& args);

}  // namespace paramspec

#endif

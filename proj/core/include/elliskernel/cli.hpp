#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace elliskernel {

/// Runs one CLI invocation.  Exit status contract: 0 on success, 1 on I/O or
/// parse errors, 2 on domain errors (reported as a machine-readable error
/// object on stdout).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace elliskernel

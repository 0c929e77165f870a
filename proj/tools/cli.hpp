// cli.hpp
//
// The racklab command line, callable in-process so it can be tested
// without spawning a child.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace racklab::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainFailure = 1,  // axiom, audit or check failure
    kIoError = 2,        // I/O, parse or usage error
    kResourceCap = 3,    // order above an enumeration cap
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace racklab::cli

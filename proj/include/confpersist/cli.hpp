#pragma once

#include <string>
#include <vector>

namespace confpersist::cli {

// Runs the batch front end; args excludes the program name. Writes artifact
// files into --out and returns the process exit status. Module errors are
// reported as machine-readable JSON on stdout with a nonzero status.
int run(const std::vector<std::string>& args);

} // namespace confpersist::cli

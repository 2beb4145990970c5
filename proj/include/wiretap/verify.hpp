#pragma once

#include <string>
#include <vector>

// Self-contained consistency checks over the numeric engines: closed forms
// against direct linear-algebra computation, inner bounds against converses,
// algebraic identities, and optimizer determinism. Used by the command-line
// `verify` subcommand.

namespace wiretap {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // worst observed error or the first failure
};

// Runs every check; deterministic. `inject_fault` corrupts one reference
// constant on purpose so the harness itself can be exercised end to end.
std::vector<CheckResult> run_verification(bool inject_fault = false);

}  // namespace wiretap

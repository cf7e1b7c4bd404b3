#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace contractk {

enum ExitCode : int {
    kExitYes = 0,
    kExitNo = 1,
    kExitUsage = 2, // usage, parse or precondition error
    kExitBudget = 3,
    kExitInternal = 4,
};

/**
 * One CLI invocation.
 *
 *   recognize split|threshold|clique FILE
 *   solve     PROBLEM FILE [--k K | --t T]
 *   oracle    PROBLEM FILE [--k K | --t T] [--exact]
 *   generate  REDUCTION FILE [--k K] [--t T] [--out PATH] [--roles PATH]
 *   verify    PROBLEM FILE --k K --cert PATH
 *   bench     exhaustive|random-split|reductions [grid flags]
 *
 * PROBLEM is split-contraction, threshold-contraction, clique-contraction,
 * rbds, osds or osdomatic. REDUCTION is clique-to-split, rbds-to-split,
 * osds-to-osdomatic or osdomatic-to-threshold.
 */
struct Command {
    std::string verb;
    std::string target; // class, problem, reduction or bench suite
    std::string input;  // "-" reads stdin
    std::optional<std::size_t> k;
    std::optional<std::size_t> t;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> cap;
    std::string out;
    std::string roles;
    std::string cert;
    bool exact = false;
    std::string format = "text";

    // bench grid
    std::string problem = "split-contraction";
    std::size_t n = 5;
    std::size_t count = 20;
    std::size_t x_max = 3;
    std::size_t y_max = 3;
};

/// Executes cmd, writing the report to `out` (or cmd.out) and diagnostics to `err`.
auto run(const Command & cmd, std::ostream & out, std::ostream & err) -> int;

} // namespace contractk

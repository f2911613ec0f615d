#ifndef PRODINT_RUN_HPP
#define PRODINT_RUN_HPP

#include "prodint/analysis.hpp"
#include "prodint/catalog.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace prodint {

/// Exit statuses of a batch run.
inline constexpr int kExitConverged = 0;
inline constexpr int kExitNoConvergence = 2;
inline constexpr int kExitUsage = 64;

/// One batch experiment: a catalog problem, the grids to run it on, Newton
/// settings, and what to emit. Output is a pure function of this struct.
struct RunConfig {
    std::string problem;
    std::vector<int> ns = {10};    ///< grid sizes for table runs
    std::vector<int> study_ns;     ///< non-empty switches to study mode
    double tol = 1e-14;
    int max_iter = 50;
    bool damping = false;
    std::string guess = "catalog"; ///< catalog | zeros | ymeans | <file with n values>
    std::optional<std::string> csv_path;
    std::optional<std::string> dump_matrix_path;
    bool emit_bound = false;       ///< requires the three bound constants
    double m0 = 0.0, M1 = 0.0, M2 = 0.0;
    long seed = 0;                 ///< reserved for randomized test drivers
};

/// Execute the run: assemble, solve, print per-iteration tables (relative
/// errors against the catalog's exact discrete solution when available),
/// write CSV/matrix files on request. Returns an exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace prodint

#endif

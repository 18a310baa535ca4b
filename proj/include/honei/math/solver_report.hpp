#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace honei::math {

/// Outcome of an iterative solve. residual_history[0] is the initial
/// residual norm; converged implies the last entry is <= tol * the first.
struct SolverReport {
    std::size_t iterations = 0;
    std::vector<double> residual_history;
    bool converged = false;
    double wall_time = 0.0;  ///< seconds
    std::string note;        ///< breakdown / divergence detail, empty on clean runs
};

}  // namespace honei::math

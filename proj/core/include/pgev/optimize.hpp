#pragma once

#include <functional>
#include <vector>

namespace pgev {

struct SimplexOptions {
    double diameter_tol = 1e-8;
    double f_spread_tol = 1e-10;
    int max_iterations = 5000;
    double initial_step = 0.1;
};

struct SimplexResult {
    std::vector<double> x;
    double f = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Nelder-Mead simplex minimization. The objective may return +infinity to
// mark infeasible points; the simplex retreats from them. Converged when the
// max vertex distance to the best point drops below diameter_tol or the
// function spread across the simplex drops below f_spread_tol.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          const std::vector<double>& start,
                          const SimplexOptions& options = {});

}  // namespace pgev

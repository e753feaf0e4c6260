#pragma once

#include <functional>

namespace pgev {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    // Set when the subdivision budget ran out before the error target was met.
    bool accuracy_warning = false;
};

// Adaptive Gauss-Kronrod (G7,K15) integration of f over (lower, upper).
// Infinite endpoints are allowed: semi-infinite ranges are mapped to (0,1)
// via x = a + u/(1-u) (and its mirror), doubly infinite ranges are split at 0.
// Integrand values are taken at interior nodes only, so integrable endpoint
// singularities are handled by repeated bisection toward the endpoint.
// A non-finite integrand value at a sampled point throws std::runtime_error.
QuadratureResult integrate(const std::function<double(double)>& f,
                           double lower, double upper,
                           double tol = 1e-10,
                           int max_intervals = 4000);

}  // namespace pgev

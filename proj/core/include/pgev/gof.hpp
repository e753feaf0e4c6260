#pragma once

#include <functional>
#include <vector>

#include "pgev/dataset.hpp"
#include "pgev/dist.hpp"

namespace pgev {

// Cramer-von Mises / Anderson-Darling statistics after the normality
// reduction of Chen & Balakrishnan (1995), with Stephens' small-sample
// modifications.  Critical values are left to the caller.
struct GofReport {
    double w2 = 0.0;          // Cramer-von Mises W^2
    double a2 = 0.0;          // Anderson-Darling A^2
    double c_modified = 0.0;  // W^2 * (1 + 0.5/n)
    double a_modified = 0.0;  // A^2 * (1 + 0.75/n + 2.25/n^2)
    std::size_t n = 0;
};

// Sorts the data, pushes each point through the fitted cdf, then through the
// inverse-normal / normal pair so the result is uniform under the null.
// Throws std::invalid_argument when a transformed point hits 0 or 1 exactly
// (the message names the offending observation) or when n < 2.
std::vector<double> uniformize(const Dataset& data,
                               const std::function<double(double)>& fitted_cdf);

// Statistics from an ascending sample of (0,1) values.
GofReport compute_statistics(const std::vector<double>& u);

// Convenience wrapper: uniformize under the parametric cdf, then score.
GofReport gof_test(const Dataset& data, const ModelParams& params);

}  // namespace pgev

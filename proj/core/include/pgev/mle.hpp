#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgev/dataset.hpp"
#include "pgev/dist.hpp"
#include "pgev/linalg.hpp"
#include "pgev/optimize.hpp"

namespace pgev {

struct FitResult {
    ModelParams params{};
    double loglik = 0.0;
    SymMatrix info_matrix{3};
    std::vector<double> std_errors;
    bool converged = false;
    int iterations = 0;
    std::vector<std::string> warnings;
};

struct FitOptions {
    SimplexOptions simplex{};
    bool compute_information = true;
};

// Log-likelihood of a dataset under any of the three fit families. Returns
// -infinity (not an error) when any observation leaves the support, so the
// optimizer can retreat. The power family demands single-signed nonzero data;
// mixed signs or zeros are input errors.
double pgev_loglik(const ModelParams& params, const Dataset& data);

// Nelder-Mead fit on (mu, log sigma, xi) ((mu, log sigma) for the fixed-shape
// family). Starts from log-scale moment matching and additionally from the
// nested fixed-shape optimum when the family has a shape, keeping the better
// mode, which guarantees the nesting inequality between fits. Warnings flag
// the nonregular shape regions.
FitResult fit_mle(const Dataset& data, Family family,
                  const std::optional<ModelParams>& init = std::nullopt,
                  const FitOptions& options = {});

// Negative Hessian of the log-likelihood at params by central differences on
// the natural (mu, sigma, xi) coordinates, step max(1e-5, 1e-5 |theta_j|),
// symmetrized. Throws when a stencil point leaves the support.
SymMatrix observed_information(const ModelParams& params, const Dataset& data);

struct QuantileCi {
    double estimate = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double variance = 0.0;
};

// Gradient of the p-exceedance quantile with respect to the parameters
// ((mu, sigma, xi), or (mu, sigma) for the fixed-shape family), evaluated
// from the closed forms with y = -log(1-p).
std::vector<double> quantile_gradient(const ModelParams& params, double p_exceed);

// Delta-method confidence interval for the level exceeded with probability
// p_exceed: estimate +- z (1+level)/2 times the square root of
// grad' Cov grad, Cov the inverse information. Throws when the information
// matrix is not invertible.
QuantileCi quantile_ci(const FitResult& fit, double p_exceed, double level);

}  // namespace pgev

#include "pgev/mle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pgev/special.hpp"

namespace pgev {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

bool fit_family(Family f) {
    return f == Family::Pgev || f == Family::Gev || f == Family::Gumbel;
}

// For the power family the data fix the branch; zeros and mixed signs can
// never enter any branch's support and are input errors rather than -inf.
int data_sign(const Dataset& data) {
    int sign = 0;
    for (double v : data.values) {
        if (v == 0.0) throw std::invalid_argument("pgev data must not contain zeros");
        const int s = v > 0.0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign) throw std::invalid_argument("pgev data must be single-signed");
    }
    return sign;
}

void validate_dataset(const Dataset& data) {
    if (data.empty()) throw std::invalid_argument("dataset is empty");
    for (double v : data.values)
        if (!std::isfinite(v)) throw std::invalid_argument("dataset contains non-finite values");
}

struct FitAxis {
    Family family;
    int sign;
    int dim;
};

ModelParams params_from_theta(const FitAxis& axis, const std::vector<double>& theta) {
    const double sigma = std::exp(theta[1]);
    switch (axis.family) {
        case Family::Pgev: return ModelParams::pgev(theta[0], sigma, theta[2], axis.sign);
        case Family::Gev: return ModelParams::gev(theta[0], sigma, theta[2]);
        default: return ModelParams::gumbel(theta[0], sigma);
    }
}

std::vector<double> theta_from_params(const FitAxis& axis, const ModelParams& p) {
    std::vector<double> theta{p.mu, std::log(p.sigma)};
    if (axis.dim == 3) theta.push_back(p.shape);
    return theta;
}

// Moment matching of a location-scale limit family on the fitting axis
// (log|x| for the power family, x itself otherwise): scale = 0.7797 sd,
// location = mean - 0.45006 sd, shape started at a mildly short tail.
std::vector<double> moment_start(const FitAxis& axis, const Dataset& data) {
    std::vector<double> z;
    z.reserve(data.size());
    for (double v : data.values)
        z.push_back(axis.family == Family::Pgev ? axis.sign * std::log(std::abs(v)) : v);
    const double n = static_cast<double>(z.size());
    const double mean = std::accumulate(z.begin(), z.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : z) ss += (v - mean) * (v - mean);
    const double sd = z.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 1.0;
    const double scale = std::max(0.7797 * sd, 1e-6);
    const double loc = mean - 0.45006 * sd;

    std::vector<double> theta{axis.family == Family::Pgev && axis.sign < 0 ? -loc : loc,
                              std::log(scale)};
    if (axis.dim == 3) theta.push_back(-0.1);
    return theta;
}

}  // namespace

double pgev_loglik(const ModelParams& params, const Dataset& data) {
    if (!fit_family(params.family))
        throw std::invalid_argument("log-likelihood defined for pgev/gev/gumbel only");
    validate_dataset(data);
    if (params.family == Family::Pgev) data_sign(data);

    double total = 0.0;
    for (double v : data.values) {
        const double lp = log_pdf(params, v);
        if (lp == -kInf) return -kInf;
        total += lp;
    }
    return total;
}

FitResult fit_mle(const Dataset& data, Family family, const std::optional<ModelParams>& init,
                  const FitOptions& options) {
    if (!fit_family(family)) throw std::invalid_argument("fit_mle: family must be pgev/gev/gumbel");
    validate_dataset(data);

    FitAxis axis{family, family == Family::Pgev ? data_sign(data) : +1,
                 family == Family::Gumbel ? 2 : 3};

    auto objective = [&](const std::vector<double>& theta) {
        if (!std::isfinite(theta[1]) || std::exp(theta[1]) <= 0.0) return kInf;
        ModelParams p{};
        try {
            p = params_from_theta(axis, theta);
        } catch (const std::invalid_argument&) {
            return kInf;
        }
        const double ll = pgev_loglik(p, data);
        return std::isfinite(ll) ? -ll : kInf;
    };

    std::vector<std::vector<double>> starts;
    if (init) {
        if (init->family != family) throw std::invalid_argument("fit_mle: init family mismatch");
        starts.push_back(theta_from_params(axis, *init));
    } else {
        starts.push_back(moment_start(axis, data));
    }

    if (axis.dim == 3) {
        // Second start at the nested fixed-shape optimum. Nelder-Mead never
        // worsens its best vertex, so the winning fit is guaranteed at least
        // the nested family's maximum.
        FitOptions nested_options = options;
        nested_options.compute_information = false;
        Dataset nested_data = data;
        if (family == Family::Pgev) {
            for (double& v : nested_data.values) v = axis.sign * std::log(std::abs(v));
        }
        const FitResult nested = fit_mle(nested_data, Family::Gumbel, std::nullopt, nested_options);
        const double loc = family == Family::Pgev && axis.sign < 0 ? -nested.params.mu
                                                                   : nested.params.mu;
        starts.push_back({loc, std::log(nested.params.sigma), 0.0});
    }

    SimplexResult best{};
    best.f = kInf;
    for (const auto& start : starts) {
        const SimplexResult run = nelder_mead(objective, start, options.simplex);
        if (run.f < best.f || best.x.empty()) best = run;
    }

    FitResult fit;
    fit.params = params_from_theta(axis, best.x);
    fit.loglik = -best.f;
    fit.converged = best.converged;
    fit.iterations = best.iterations;
    if (axis.dim == 3) {
        if (fit.params.shape <= -0.5)
            fit.warnings.push_back("xi <= -0.5: nonstandard asymptotics");
        if (fit.params.shape >= 1.0)
            fit.warnings.push_back("xi >= 1: MLE may be nonregular");
    }

    fit.info_matrix = SymMatrix(axis.dim);
    fit.std_errors.assign(static_cast<std::size_t>(axis.dim), kNan);
    if (options.compute_information) {
        try {
            fit.info_matrix = observed_information(fit.params, data);
            if (const auto cov = spd_inverse(fit.info_matrix)) {
                for (int i = 0; i < axis.dim; ++i)
                    fit.std_errors[static_cast<std::size_t>(i)] = std::sqrt(cov->at(i, i));
            } else {
                fit.warnings.push_back("information matrix not positive definite");
            }
        } catch (const std::exception& e) {
            fit.warnings.push_back(std::string("information matrix unavailable: ") + e.what());
        }
    }
    return fit;
}

SymMatrix observed_information(const ModelParams& params, const Dataset& data) {
    if (!fit_family(params.family))
        throw std::invalid_argument("observed_information: family must be pgev/gev/gumbel");
    const int dim = params.family == Family::Gumbel ? 2 : 3;

    std::vector<double> theta{params.mu, params.sigma};
    if (dim == 3) theta.push_back(params.shape);

    auto eval = [&](const std::vector<double>& t) {
        if (!(t[1] > 0.0))
            throw std::domain_error("observed_information: sigma stencil left (0, inf)");
        ModelParams p = params;
        p.mu = t[0];
        p.sigma = t[1];
        if (dim == 3) p.shape = t[2];
        const double ll = pgev_loglik(p, data);
        if (!std::isfinite(ll))
            throw std::domain_error(
                "observed_information: log-likelihood not finite at a stencil point");
        return ll;
    };

    std::vector<double> h(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j)
        h[static_cast<std::size_t>(j)] =
            std::max(1e-5, 1e-5 * std::abs(theta[static_cast<std::size_t>(j)]));

    auto shifted = [&theta](int i, double di, int j, double dj) {
        std::vector<double> t = theta;
        t[static_cast<std::size_t>(i)] += di;
        if (j >= 0) t[static_cast<std::size_t>(j)] += dj;
        return t;
    };

    const double f0 = eval(theta);
    SymMatrix info(dim);
    for (int i = 0; i < dim; ++i) {
        const double hi = h[static_cast<std::size_t>(i)];
        info.at(i, i) = -(eval(shifted(i, hi, -1, 0.0)) - 2.0 * f0 + eval(shifted(i, -hi, -1, 0.0))) /
                        (hi * hi);
        for (int j = i + 1; j < dim; ++j) {
            const double hj = h[static_cast<std::size_t>(j)];
            const double mixed = (eval(shifted(i, hi, j, hj)) - eval(shifted(i, hi, j, -hj)) -
                                  eval(shifted(i, -hi, j, hj)) + eval(shifted(i, -hi, j, -hj))) /
                                 (4.0 * hi * hj);
            info.at(i, j) = -mixed;
            info.at(j, i) = -mixed;
        }
    }
    return symmetrized(info);
}

std::vector<double> quantile_gradient(const ModelParams& params, double p_exceed) {
    if (!fit_family(params.family))
        throw std::invalid_argument("quantile_gradient: family must be pgev/gev/gumbel");
    if (!(p_exceed > 0.0 && p_exceed < 1.0))
        throw std::invalid_argument("quantile_gradient: p must lie in (0, 1)");

    const double y = -std::log1p(-p_exceed);
    const double ly = std::log(y);
    const double sigma = params.sigma;
    const double xi = params.shape;

    if (params.family == Family::Gumbel) return {1.0, -ly};

    if (params.family == Family::Gev) {
        if (std::abs(xi) < kXiZeroTol) return {1.0, -ly, sigma * ly * ly / 2.0};
        const double t = std::pow(y, -xi);
        return {1.0, (t - 1.0) / xi, sigma / (xi * xi) * (1.0 - t) - (sigma / xi) * t * ly};
    }

    const double xq = quantile(params, 1.0 - p_exceed);
    const double axq = std::abs(xq);
    if (std::abs(xi) < kXiZeroTol) return {xq, -axq * ly, axq * sigma * ly * ly / 2.0};
    const double t = std::pow(y, -xi);
    // y^-xi log y^-xi - (y^-xi - 1), the Appendix-style shape component.
    const double shape_term = t * (-xi * ly) - (t - 1.0);
    return {xq, axq * (t - 1.0) / xi, axq * (sigma / (xi * xi)) * shape_term};
}

QuantileCi quantile_ci(const FitResult& fit, double p_exceed, double level) {
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("quantile_ci: level must lie in (0, 1)");
    const std::vector<double> grad = quantile_gradient(fit.params, p_exceed);

    const auto cov = spd_inverse(fit.info_matrix);
    if (!cov) {
        std::string diag = "quantile_ci: singular information matrix; diagonal =";
        for (int i = 0; i < fit.info_matrix.n; ++i)
            diag += " " + std::to_string(fit.info_matrix.at(i, i));
        throw std::runtime_error(diag);
    }

    QuantileCi ci;
    ci.estimate = quantile(fit.params, 1.0 - p_exceed);
    ci.variance = quadratic_form(*cov, grad);
    const double z = std_normal_quantile(0.5 * (1.0 + level));
    const double half = z * std::sqrt(ci.variance);
    ci.lower = ci.estimate - half;
    ci.upper = ci.estimate + half;
    return ci;
}

}  // namespace pgev

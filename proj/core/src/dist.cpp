#include "pgev/dist.hpp"

#include <cmath>
#include <limits>

#include "pgev/rng.hpp"
#include "pgev/special.hpp"

namespace pgev {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// GEV pieces on an arbitrary axis. Every Pgev operation routes through these
// with z = log x on the positive branch, or z = -log(-x) and loc = -mu on the
// negative branch.
double gev_cdf_core(double z, double loc, double scale, double xi) {
    const double u = (z - loc) / scale;
    if (std::abs(xi) < kXiZeroTol) return std::exp(-std::exp(-u));
    const double w = 1.0 + xi * u;
    if (w <= 0.0) return xi > 0.0 ? 0.0 : 1.0;
    return std::exp(-std::pow(w, -1.0 / xi));
}

double gev_logpdf_core(double z, double loc, double scale, double xi) {
    const double u = (z - loc) / scale;
    if (std::abs(xi) < kXiZeroTol) return -std::log(scale) - u - std::exp(-u);
    const double w = 1.0 + xi * u;
    if (w <= 0.0) return -kInf;
    const double lw = std::log(w);
    return -std::log(scale) - (1.0 + 1.0 / xi) * lw - std::exp(-lw / xi);
}

double gev_quantile_core(double p, double loc, double scale, double xi) {
    const double ly = std::log(-std::log(p));
    if (std::abs(xi) < kXiZeroTol) return loc - scale * ly;
    return loc + scale * std::expm1(-xi * ly) / xi;
}

bool is_pmax(Family f) {
    switch (f) {
        case Family::Pgev:
        case Family::Gev:
        case Family::Gumbel:
            return false;
        default:
            return true;
    }
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Pgev: return "pgev";
        case Family::Gev: return "gev";
        case Family::Gumbel: return "gumbel";
        case Family::LogFrechet: return "log-frechet";
        case Family::LogWeibull: return "log-weibull";
        case Family::StdFrechet: return "std-frechet";
        case Family::NegLogFrechet: return "neg-log-frechet";
        case Family::NegLogWeibull: return "neg-log-weibull";
        case Family::NegExponential: return "neg-exponential";
    }
    return "unknown";
}

bool ModelParams::has_shape() const {
    switch (family) {
        case Family::Gumbel:
        case Family::StdFrechet:
        case Family::NegExponential:
            return false;
        default:
            return true;
    }
}

ModelParams ModelParams::pgev(double mu, double sigma, double xi, int support_sign) {
    require(std::isfinite(mu), "pgev: mu must be finite");
    require(std::isfinite(sigma) && sigma > 0.0, "pgev: sigma must be positive");
    require(std::isfinite(xi), "pgev: xi must be finite");
    require(support_sign == 1 || support_sign == -1, "pgev: support_sign must be +1 or -1");
    return ModelParams{Family::Pgev, mu, sigma, xi, support_sign};
}

ModelParams ModelParams::gev(double mu, double sigma, double xi) {
    require(std::isfinite(mu), "gev: mu must be finite");
    require(std::isfinite(sigma) && sigma > 0.0, "gev: sigma must be positive");
    require(std::isfinite(xi), "gev: xi must be finite");
    return ModelParams{Family::Gev, mu, sigma, xi, +1};
}

ModelParams ModelParams::gumbel(double mu, double sigma) {
    require(std::isfinite(mu), "gumbel: mu must be finite");
    require(std::isfinite(sigma) && sigma > 0.0, "gumbel: sigma must be positive");
    return ModelParams{Family::Gumbel, mu, sigma, 0.0, +1};
}

ModelParams ModelParams::pmax(Family kind, double alpha) {
    require(is_pmax(kind), "pmax: kind must be one of the power-max stable laws");
    ModelParams p{kind, 0.0, 1.0, kNan, +1};
    if (p.has_shape()) {
        require(std::isfinite(alpha) && alpha > 0.0, "pmax: alpha must be positive");
        p.shape = alpha;
    }
    return p;
}

SupportInterval support(const ModelParams& params) {
    const double mu = params.mu;
    const double sigma = params.sigma;
    const double xi = params.shape;
    switch (params.family) {
        case Family::Pgev: {
            if (params.support_sign > 0) {
                if (xi >= kXiZeroTol) return {std::exp(mu - sigma / xi), kInf};
                if (xi <= -kXiZeroTol) return {0.0, std::exp(mu - sigma / xi)};
                return {0.0, kInf};
            }
            if (xi >= kXiZeroTol) return {-std::exp(mu + sigma / xi), 0.0};
            if (xi <= -kXiZeroTol) return {-kInf, -std::exp(mu + sigma / xi)};
            return {-kInf, 0.0};
        }
        case Family::Gev:
            if (xi >= kXiZeroTol) return {mu - sigma / xi, kInf};
            if (xi <= -kXiZeroTol) return {-kInf, mu - sigma / xi};
            return {-kInf, kInf};
        case Family::Gumbel: return {-kInf, kInf};
        case Family::LogFrechet: return {1.0, kInf};
        case Family::LogWeibull: return {0.0, 1.0};
        case Family::StdFrechet: return {0.0, kInf};
        case Family::NegLogFrechet: return {-1.0, 0.0};
        case Family::NegLogWeibull: return {-kInf, -1.0};
        case Family::NegExponential: return {-kInf, 0.0};
    }
    return {kNan, kNan};
}

double cdf(const ModelParams& params, double x) {
    const double a = params.shape;
    switch (params.family) {
        case Family::Pgev:
            if (params.support_sign > 0) {
                if (x <= 0.0) return 0.0;
                return gev_cdf_core(std::log(x), params.mu, params.sigma, a);
            }
            if (x >= 0.0) return 1.0;
            return gev_cdf_core(-std::log(-x), -params.mu, params.sigma, a);
        case Family::Gev:
            return gev_cdf_core(x, params.mu, params.sigma, a);
        case Family::Gumbel:
            return gev_cdf_core(x, params.mu, params.sigma, 0.0);
        case Family::LogFrechet:
            if (x <= 1.0) return 0.0;
            return std::exp(-std::pow(std::log(x), -a));
        case Family::LogWeibull:
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return std::exp(-std::pow(-std::log(x), a));
        case Family::StdFrechet:
            if (x <= 0.0) return 0.0;
            return std::exp(-1.0 / x);
        case Family::NegLogFrechet:
            if (x <= -1.0) return 0.0;
            if (x >= 0.0) return 1.0;
            return std::exp(-std::pow(-std::log(-x), -a));
        case Family::NegLogWeibull:
            if (x >= -1.0) return 1.0;
            return std::exp(-std::pow(std::log(-x), a));
        case Family::NegExponential:
            if (x >= 0.0) return 1.0;
            return std::exp(x);
    }
    return kNan;
}

double pdf(const ModelParams& params, double x) {
    const double a = params.shape;
    switch (params.family) {
        case Family::Pgev:
            if (params.support_sign > 0) {
                if (x <= 0.0) return 0.0;
                const double lx = std::log(x);
                return std::exp(gev_logpdf_core(lx, params.mu, params.sigma, a) - lx);
            } else {
                if (x >= 0.0) return 0.0;
                const double lmx = std::log(-x);
                return std::exp(gev_logpdf_core(-lmx, -params.mu, params.sigma, a) - lmx);
            }
        case Family::Gev:
            return std::exp(gev_logpdf_core(x, params.mu, params.sigma, a));
        case Family::Gumbel:
            return std::exp(gev_logpdf_core(x, params.mu, params.sigma, 0.0));
        case Family::LogFrechet: {
            if (x <= 1.0) return 0.0;
            const double l = std::log(x);
            return cdf(params, x) * a * std::pow(l, -a - 1.0) / x;
        }
        case Family::LogWeibull: {
            if (x <= 0.0 || x >= 1.0) return 0.0;
            const double l = -std::log(x);
            return cdf(params, x) * a * std::pow(l, a - 1.0) / x;
        }
        case Family::StdFrechet:
            if (x <= 0.0) return 0.0;
            return std::exp(-1.0 / x) / (x * x);
        case Family::NegLogFrechet: {
            if (x <= -1.0 || x >= 0.0) return 0.0;
            const double l = -std::log(-x);
            return cdf(params, x) * a * std::pow(l, -a - 1.0) / (-x);
        }
        case Family::NegLogWeibull: {
            if (x >= -1.0) return 0.0;
            const double l = std::log(-x);
            return cdf(params, x) * a * std::pow(l, a - 1.0) / (-x);
        }
        case Family::NegExponential:
            if (x >= 0.0) return 0.0;
            return std::exp(x);
    }
    return kNan;
}

double log_pdf(const ModelParams& params, double x) {
    switch (params.family) {
        case Family::Pgev:
            if (params.support_sign > 0) {
                if (x <= 0.0) return -kInf;
                const double lx = std::log(x);
                return gev_logpdf_core(lx, params.mu, params.sigma, params.shape) - lx;
            } else {
                if (x >= 0.0) return -kInf;
                const double lmx = std::log(-x);
                return gev_logpdf_core(-lmx, -params.mu, params.sigma, params.shape) - lmx;
            }
        case Family::Gev:
            return gev_logpdf_core(x, params.mu, params.sigma, params.shape);
        case Family::Gumbel:
            return gev_logpdf_core(x, params.mu, params.sigma, 0.0);
        default:
            return std::log(pdf(params, x));
    }
}

double quantile(const ModelParams& params, double p) {
    require(std::isfinite(p) && p > 0.0 && p < 1.0, "quantile: p must lie in (0, 1)");
    const double a = params.shape;
    const double y = -std::log(p);
    switch (params.family) {
        case Family::Pgev:
            if (params.support_sign > 0)
                return std::exp(gev_quantile_core(p, params.mu, params.sigma, a));
            return -std::exp(-gev_quantile_core(p, -params.mu, params.sigma, a));
        case Family::Gev:
            return gev_quantile_core(p, params.mu, params.sigma, a);
        case Family::Gumbel:
            return gev_quantile_core(p, params.mu, params.sigma, 0.0);
        case Family::LogFrechet: return std::exp(std::pow(y, -1.0 / a));
        case Family::LogWeibull: return std::exp(-std::pow(y, 1.0 / a));
        case Family::StdFrechet: return 1.0 / y;
        case Family::NegLogFrechet: return -std::exp(-std::pow(y, -1.0 / a));
        case Family::NegLogWeibull: return -std::exp(std::pow(y, 1.0 / a));
        case Family::NegExponential: return -y;
    }
    return kNan;
}

Dataset sample(const ModelParams& params, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Dataset out;
    out.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.values.push_back(quantile(params, rng.uniform()));
    return out;
}

double moment(const ModelParams& params, int k) {
    require(k >= 1, "moment: order k must be >= 1");
    if (params.family != Family::Pgev)
        throw MomentUndefinedError(family_name(params.family) +
                                   " has no closed-form absolute moments");
    const double xi = params.shape;
    const double kd = static_cast<double>(k);
    if (params.support_sign > 0 && xi <= -kXiZeroTol) {
        // E X^k = e^{k(mu - sigma/xi)} M_Y(k sigma/|xi|; 1/|xi|), Y Weibull.
        const double t = kd * params.sigma / -xi;
        return std::exp(kd * (params.mu - params.sigma / xi)) * weibull_mgf(t, 1.0 / -xi).value;
    }
    if (params.support_sign < 0 && xi >= kXiZeroTol) {
        // E|X|^k = e^{k(mu + sigma/xi)} E e^{-t Y^{-1}}, t = k sigma/xi.
        const double t = kd * params.sigma / xi;
        return std::exp(kd * (params.mu + params.sigma / xi)) * inv_weibull_mgf(t, 1.0 / xi);
    }
    throw MomentUndefinedError(
        "pgev absolute moments exist only for (support_sign=+1, xi<0) or "
        "(support_sign=-1, xi>0)");
}

double variance(const ModelParams& params) {
    const double sgn = params.support_sign > 0 ? 1.0 : -1.0;
    const double ex = sgn * moment(params, 1);
    const double ex2 = moment(params, 2);
    return ex2 - ex * ex;
}

double entropy(const ModelParams& params) {
    const double mu = params.mu;
    const double sigma = params.sigma;
    const double xi = params.shape;
    switch (params.family) {
        case Family::Pgev: {
            const double sgn = params.support_sign > 0 ? 1.0 : -1.0;
            if (xi >= kXiZeroTol)
                throw EntropyUndefinedError("pgev entropy closed form requires xi <= 0");
            if (xi > -kXiZeroTol)
                return mu + std::log(sigma) + (1.0 + sigma * sgn) * kEulerGamma + 1.0;
            // Entropy of log|X| plus E log|X|.
            return mu + std::log(sigma) + (1.0 + xi) * kEulerGamma +
                   sgn * (sigma / xi) * (gamma_fn(1.0 - xi) - 1.0) + 1.0;
        }
        case Family::Gev:
            if (xi >= 1.0)
                throw EntropyUndefinedError("gev entropy closed form requires xi < 1");
            return std::log(sigma) + (1.0 + xi) * kEulerGamma + 1.0;
        case Family::Gumbel:
            return std::log(sigma) + kEulerGamma + 1.0;
        default:
            throw EntropyUndefinedError(family_name(params.family) +
                                        " has no entropy closed form here");
    }
}

}  // namespace pgev

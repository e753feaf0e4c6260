#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "pgev/dataset.hpp"

namespace pgev {

// Families handled by the distribution layer.
//
// Pgev is the power generalized extreme value law on log scale: for
// support_sign s = +1/-1 and shape xi,
//   F(x) = exp(-[1 + (xi/sigma) s (log|x| - mu)]_+^{-1/xi}),  s*x > 0,
// which lives on a positive half-line branch (s=+1) or a negative one (s=-1).
// Gev/Gumbel are the usual linear-scale laws. The six remaining entries are
// the standardized power-max stable laws, classically numbered K1..K6:
//   LogFrechet    (K1)  exp(-(log x)^-alpha)        on (1, inf)
//   LogWeibull    (K2)  exp(-(-log x)^alpha)        on (0, 1)
//   StdFrechet    (K3)  exp(-1/x)                   on (0, inf)
//   NegLogFrechet (K4)  exp(-(-log(-x))^-alpha)     on (-1, 0)
//   NegLogWeibull (K5)  exp(-(log(-x))^alpha)       on (-inf, -1)
//   NegExponential(K6)  exp(x)                      on (-inf, 0)
enum class Family {
    Pgev,
    Gev,
    Gumbel,
    LogFrechet,
    LogWeibull,
    StdFrechet,
    NegLogFrechet,
    NegLogWeibull,
    NegExponential,
};

std::string family_name(Family f);

class MomentUndefinedError : public std::domain_error {
  public:
    explicit MomentUndefinedError(const std::string& what) : std::domain_error(what) {}
};

class EntropyUndefinedError : public std::domain_error {
  public:
    explicit EntropyUndefinedError(const std::string& what) : std::domain_error(what) {}
};

// Open interval carrying the set where the density is positive.
struct SupportInterval {
    double lower;
    double upper;
    bool contains(double x) const { return x > lower && x < upper; }
};

// Parameter bundle. mu/sigma are the location/scale of the family itself
// (log-scale location for Pgev, linear for Gev/Gumbel); shape stores xi for
// Pgev/Gev and alpha for the four alpha-indexed power-max laws. support_sign
// is meaningful only for Pgev. Construct through the factories, which
// validate. Below |xi| = 1e-8 every Pgev/Gev formula switches to its
// exact xi -> 0 limit form.
struct ModelParams {
    Family family = Family::Gumbel;
    double mu = 0.0;
    double sigma = 1.0;
    double shape = 0.0;
    int support_sign = +1;

    double xi() const { return shape; }
    double alpha() const { return shape; }
    bool has_shape() const;

    static ModelParams pgev(double mu, double sigma, double xi, int support_sign);
    static ModelParams gev(double mu, double sigma, double xi);
    static ModelParams gumbel(double mu, double sigma);
    // Standardized power-max stable law; alpha required for the four
    // alpha-indexed families and ignored for StdFrechet/NegExponential.
    static ModelParams pmax(Family kind, double alpha = 1.0);
};

// Shape threshold below which xi is treated as exactly zero.
inline constexpr double kXiZeroTol = 1e-8;

SupportInterval support(const ModelParams& params);

// Distribution function; totals to 0 below and 1 above the support.
double cdf(const ModelParams& params, double x);

// Density; 0 outside the support.
double pdf(const ModelParams& params, double x);

// log of the density; -infinity outside the support.
double log_pdf(const ModelParams& params, double x);

// Conventional p-quantile (cdf(quantile(p)) = p), p strictly inside (0,1).
double quantile(const ModelParams& params, double p);

// n iid draws by inversion; deterministic for a given seed.
Dataset sample(const ModelParams& params, std::size_t n, std::uint64_t seed);

// E|X|^k for integer k >= 1. Defined exactly for the Pgev combinations with
// finite absolute moments: (support_sign=+1, xi<0) and (support_sign=-1, xi>0);
// anything else raises MomentUndefinedError.
double moment(const ModelParams& params, int k);

// Var X, assembled from the first two absolute moments by the binomial
// expansion of E(X - EX)^2; defined exactly where moment() is.
double variance(const ModelParams& params);

// Differential entropy. Closed forms: Pgev needs xi < 0 (xi = 0 uses the
// limit form; xi > 0 raises EntropyUndefinedError); Gev/Gumbel need shape < 1.
double entropy(const ModelParams& params);

}  // namespace pgev

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pgev {

// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Gamma function via a Lanczos approximation (g = 7, 9 coefficients), with the
// reflection formula for arguments below 1/2. Accurate to ~13 significant digits.
// Throws std::domain_error at poles (x a non-positive integer).
double gamma_fn(double x);

// log |Gamma(x)| companion (same approximation); poles throw as above.
double log_gamma(double x);

// Error function: series for small |x|, a continued fraction for the
// complementary function in the tails. |error| < 1e-14.
double erf_fn(double x);
double erfc_fn(double x);

// Standard normal distribution function and its inverse. The inverse uses a
// rational initial guess refined by Halley steps on erfc, exact to ~1e-15;
// p must lie strictly inside (0,1).
double std_normal_cdf(double x);
double std_normal_quantile(double p);

// Generalized hypergeometric series pFq(upper; lower; x) by direct summation
// with term recursion. Requirements:
//   - no lower parameter may be zero or a negative integer (pole);
//   - #upper <= #lower, or #upper == #lower+1 with |x| < 1, unless some upper
//     parameter is a non-positive integer (terminating series).
// Summation stops once three consecutive terms fall below tol * |partial sum|;
// exceeding max_terms throws std::runtime_error.
struct HypergeomSpec {
    std::vector<double> upper;
    std::vector<double> lower;
    double argument = 0.0;
};
double gen_hypergeom(const HypergeomSpec& spec, double tol = 1e-12,
                     int max_terms = 10000);

// Best rational approximation p/q of x with q <= max_denominator via continued
// fractions; empty when no convergent matches x to ~1e-9 relative.
std::optional<std::pair<long, long>> detect_rational(double x,
                                                     long max_denominator = 50);

// Laplace transform of the Weibull(alpha) density:
//   M_Y(t; alpha) = alpha * int_0^inf x^{alpha-1} exp(-t x - x^alpha) dx,
// i.e. E exp(-tY) for Y with survival exp(-y^alpha). Dispatch:
//   Auto        alpha == 1 -> 1/(1+t); alpha == 2 -> the erfc closed form;
//               rational alpha -> hypergeometric series; otherwise quadrature.
//   Series      hypergeometric closed form for rational alpha = p/q (q <= 50);
//               falls back to quadrature (flag set) when alpha is not rational
//               or the series argument is too large to sum accurately.
//   Quadrature  adaptive integration of exp(-t v^{1/alpha} - v) over (0, inf).
// Requires t >= 0 and alpha > 0.
enum class MgfMethod { Auto, Series, Quadrature };

struct WeibullMgf {
    double value = 0.0;
    bool quadrature_fallback = false;
};

WeibullMgf weibull_mgf(double t, double alpha, MgfMethod method = MgfMethod::Auto);

// E exp(-t / Y) for the same Weibull(alpha) variable (inverse-argument
// transform), always computed by adaptive quadrature. Requires t >= 0, alpha > 0.
double inv_weibull_mgf(double t, double alpha);

}  // namespace pgev

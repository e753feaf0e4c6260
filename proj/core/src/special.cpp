#include "pgev/special.hpp"

#include <cmath>
#include <stdexcept>

#include "pgev/quadrature.hpp"

namespace pgev {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSqrt2Pi = 2.5066282746310005024;

bool is_nonpositive_integer(double x, double eps = 1e-12) {
    return x <= 0.5 && std::fabs(x - std::round(x)) < eps;
}

// Lanczos coefficients, g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double x) {
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
    return a;
}

// sqrt(pi) * exp(x^2) * erfc(x) for x > 0, by the classical continued fraction
// 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))) evaluated with modified Lentz.
double erfc_cf_scaled(double x) {
    const double tiny = 1e-300;
    double f = x;
    if (f == 0.0) f = tiny;
    double c = f, d = 0.0;
    for (int k = 1; k <= 300; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        if (d == 0.0) d = tiny;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return 1.0 / f;
}

// exp(x^2) * erfc(x) without overflow, x >= 0.
double erfcx_positive(double x) {
    if (x > 2.0) return erfc_cf_scaled(x) / kSqrtPi;
    return std::exp(x * x) * erfc_fn(x);
}

double weibull_mgf_quadrature(double t, double alpha) {
    // Substituting v = x^alpha removes the x^{alpha-1} endpoint singularity:
    //   M_Y(t; alpha) = int_0^inf exp(-t v^{1/alpha} - v) dv.
    const double inv_alpha = 1.0 / alpha;
    auto f = [t, inv_alpha](double v) {
        return std::exp(-t * std::pow(v, inv_alpha) - v);
    };
    return integrate(f, 0.0, INFINITY, 1e-12).value;
}

double weibull_mgf_alpha2(double t) {
    // M_Y(t; 2) = 1 - t (sqrt(pi)/2) exp(t^2/4) erfc(t/2), written through the
    // scaled complement so large t cannot overflow.
    return 1.0 - t * (kSqrtPi / 2.0) * erfcx_positive(0.5 * t);
}

// Hypergeometric closed form for rational alpha = p/q (lowest terms, p != q).
// Derived by resumming the tail expansion over residue classes mod q (alpha < 1)
// or the moment series over residue classes mod p (alpha > 1); the grouped inner
// sums become pFq values through the Gauss multiplication formula.
double weibull_mgf_series_rational(double t, long p, long q) {
    const double alpha = static_cast<double>(p) / static_cast<double>(q);
    long double total = 0.0L;
    if (p < q) {
        // alpha < 1: M = alpha * sum_{j=0}^{q-1} (-1)^j/j! Gamma(a_j) t^{-a_j}
        //            * F(1, Delta(p, a_j); Delta(q, 1+j); (-1)^q z),
        // a_j = alpha (j+1), z = p^p / (t^p q^q).
        const double z = std::pow(static_cast<double>(p), static_cast<double>(p)) /
                         (std::pow(t, static_cast<double>(p)) *
                          std::pow(static_cast<double>(q), static_cast<double>(q)));
        const double arg = (q % 2 == 0) ? z : -z;
        long double factorial = 1.0L;
        for (long j = 0; j < q; ++j) {
            if (j > 0) factorial *= j;
            const double a = alpha * (j + 1);
            HypergeomSpec hs;
            hs.upper.push_back(1.0);
            for (long i = 0; i < p; ++i) hs.upper.push_back((a + i) / p);
            for (long i = 0; i < q; ++i) hs.lower.push_back((1.0 + j + i) / q);
            hs.argument = arg;
            const double fj = gen_hypergeom(hs);
            long double term = gamma_fn(a) * std::pow(t, -a) / factorial * fj;
            total += (j % 2 == 0) ? term : -term;
        }
        total *= alpha;
    } else {
        // alpha > 1: M = sum_{j=0}^{p-1} (-t)^j/j! Gamma(b_j)
        //            * F(1, Delta(q, b_j); Delta(p, 1+j); (-1)^p / z),
        // b_j = 1 + j/alpha, 1/z = t^p q^q / p^p.
        const double inv_z = std::pow(t, static_cast<double>(p)) *
                             std::pow(static_cast<double>(q), static_cast<double>(q)) /
                             std::pow(static_cast<double>(p), static_cast<double>(p));
        const double arg = (p % 2 == 0) ? inv_z : -inv_z;
        long double factorial = 1.0L;
        long double t_pow = 1.0L;
        for (long j = 0; j < p; ++j) {
            if (j > 0) {
                factorial *= j;
                t_pow *= -t;
            }
            const double b = 1.0 + static_cast<double>(j) / alpha;
            HypergeomSpec hs;
            hs.upper.push_back(1.0);
            for (long i = 0; i < q; ++i) hs.upper.push_back((b + i) / q);
            for (long i = 0; i < p; ++i) hs.lower.push_back((1.0 + j + i) / p);
            hs.argument = arg;
            const double fj = gen_hypergeom(hs);
            total += t_pow / factorial * gamma_fn(b) * fj;
        }
    }
    return static_cast<double>(total);
}

// Magnitude guard for the hypergeometric argument: beyond this the alternating
// sums lose too many digits even in long double.
constexpr double kSeriesArgGuard = 30.0;

bool series_argument_ok(double t, long p, long q) {
    double arg;
    if (p < q) {
        arg = std::pow(static_cast<double>(p), static_cast<double>(p)) /
              (std::pow(t, static_cast<double>(p)) *
               std::pow(static_cast<double>(q), static_cast<double>(q)));
    } else {
        arg = std::pow(t, static_cast<double>(p)) *
              std::pow(static_cast<double>(q), static_cast<double>(q)) /
              std::pow(static_cast<double>(p), static_cast<double>(p));
    }
    return std::isfinite(arg) && std::fabs(arg) <= kSeriesArgGuard;
}

}  // namespace

double gamma_fn(double x) {
    if (!std::isfinite(x)) throw std::domain_error("gamma_fn: non-finite argument");
    if (is_nonpositive_integer(x))
        throw std::domain_error("gamma_fn: pole at non-positive integer");
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    const double base = z + 7.5;
    return kSqrt2Pi * std::pow(base, z + 0.5) * std::exp(-base) * lanczos_sum(x);
}

double log_gamma(double x) {
    if (!std::isfinite(x)) throw std::domain_error("log_gamma: non-finite argument");
    if (is_nonpositive_integer(x))
        throw std::domain_error("log_gamma: pole at non-positive integer");
    if (x < 0.5)
        return std::log(M_PI / std::fabs(std::sin(M_PI * x))) - log_gamma(1.0 - x);
    const double z = x - 1.0;
    const double base = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(base) - base +
           std::log(lanczos_sum(x));
}

double erf_fn(double x) {
    if (std::isnan(x)) throw std::domain_error("erf_fn: NaN argument");
    const double ax = std::fabs(x);
    if (ax > 2.0) {
        const double tail = erfc_cf_scaled(ax) * std::exp(-ax * ax) / kSqrtPi;
        return x > 0 ? 1.0 - tail : tail - 1.0;
    }
    // Maclaurin series sum (-1)^n x^{2n+1} / (n! (2n+1)).
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n <= 200; ++n) {
        term *= -x2 / n;
        const double contrib = term / (2 * n + 1);
        sum += contrib;
        if (std::fabs(contrib) < 1e-18 * std::fabs(sum)) break;
    }
    return (2.0 / kSqrtPi) * sum;
}

double erfc_fn(double x) {
    if (std::isnan(x)) throw std::domain_error("erfc_fn: NaN argument");
    if (x > 2.0) return erfc_cf_scaled(x) * std::exp(-x * x) / kSqrtPi;
    if (x < -2.0) return 2.0 - erfc_fn(-x);
    return 1.0 - erf_fn(x);
}

double std_normal_cdf(double x) { return 0.5 * erfc_fn(-x * M_SQRT1_2); }

double std_normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("std_normal_quantile: p must lie in (0,1)");
    // Rational approximation (Acklam), then Halley refinement on the cdf.
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    double x;
    if (p < p_low) {
        const double qv = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * qv + c[1]) * qv + c[2]) * qv + c[3]) * qv + c[4]) * qv + c[5]) /
            ((((d[0] * qv + d[1]) * qv + d[2]) * qv + d[3]) * qv + 1.0);
    } else if (p > 1.0 - p_low) {
        const double qv = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * qv + c[1]) * qv + c[2]) * qv + c[3]) * qv + c[4]) * qv + c[5]) /
            ((((d[0] * qv + d[1]) * qv + d[2]) * qv + d[3]) * qv + 1.0);
    } else {
        const double qv = p - 0.5;
        const double r = qv * qv;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * qv /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    for (int it = 0; it < 2; ++it) {
        const double e = std_normal_cdf(x) - p;
        const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

double gen_hypergeom(const HypergeomSpec& spec, double tol, int max_terms) {
    for (double bv : spec.lower)
        if (is_nonpositive_integer(bv))
            throw std::domain_error(
                "gen_hypergeom: lower parameter at a non-positive integer pole");
    bool terminating = false;
    for (double av : spec.upper)
        if (is_nonpositive_integer(av)) terminating = true;
    const std::size_t nu = spec.upper.size(), nl = spec.lower.size();
    if (!terminating) {
        if (nu > nl + 1)
            throw std::runtime_error("gen_hypergeom: series diverges (too many upper parameters)");
        if (nu == nl + 1 && std::fabs(spec.argument) >= 1.0)
            throw std::runtime_error("gen_hypergeom: series diverges for |argument| >= 1");
    }
    long double term = 1.0L;
    long double sum = 1.0L;
    int consecutive_small = 0;
    for (int k = 0; k < max_terms; ++k) {
        long double ratio = 1.0L;
        for (double av : spec.upper) ratio *= av + k;
        for (double bv : spec.lower) ratio /= bv + k;
        term *= ratio * spec.argument / (k + 1);
        if (term == 0.0L) return static_cast<double>(sum);  // terminated exactly
        sum += term;
        if (std::fabs(static_cast<double>(term)) <
            tol * std::fabs(static_cast<double>(sum))) {
            if (++consecutive_small >= 3) return static_cast<double>(sum);
        } else {
            consecutive_small = 0;
        }
    }
    throw std::runtime_error("gen_hypergeom: did not converge within max_terms");
}

std::optional<std::pair<long, long>> detect_rational(double x, long max_denominator) {
    if (!std::isfinite(x) || max_denominator < 1) return std::nullopt;
    const double sign = x < 0 ? -1.0 : 1.0;
    double v = std::fabs(x);
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(v);
        if (fl > 1e17) break;
        const long ai = static_cast<long>(fl);
        const long p2 = ai * p1 + p0;
        const long q2 = ai * q1 + q0;
        if (q2 > max_denominator) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double frac = v - fl;
        if (frac < 1e-12) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return std::nullopt;
    const double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::fabs(approx - std::fabs(x)) <= 1e-9 * std::max(1.0, std::fabs(x)))
        return std::make_pair(static_cast<long>(sign * p1), q1);
    return std::nullopt;
}

WeibullMgf weibull_mgf(double t, double alpha, MgfMethod method) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("weibull_mgf: alpha must be positive");
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::domain_error("weibull_mgf: t must be finite and >= 0");
    if (t == 0.0) return {1.0, false};

    const bool alpha_is_one = std::fabs(alpha - 1.0) < 1e-12;
    const bool alpha_is_two = std::fabs(alpha - 2.0) < 1e-12;

    switch (method) {
        case MgfMethod::Quadrature:
            return {weibull_mgf_quadrature(t, alpha), false};
        case MgfMethod::Series: {
            if (alpha_is_one) return {1.0 / (1.0 + t), false};
            const auto pq = detect_rational(alpha);
            if (pq && pq->first != pq->second && series_argument_ok(t, pq->first, pq->second))
                return {weibull_mgf_series_rational(t, pq->first, pq->second), false};
            return {weibull_mgf_quadrature(t, alpha), true};
        }
        case MgfMethod::Auto:
        default: {
            if (alpha_is_one) return {1.0 / (1.0 + t), false};
            if (alpha_is_two) return {weibull_mgf_alpha2(t), false};
            const auto pq = detect_rational(alpha);
            if (pq && pq->first != pq->second && series_argument_ok(t, pq->first, pq->second))
                return {weibull_mgf_series_rational(t, pq->first, pq->second), false};
            return {weibull_mgf_quadrature(t, alpha), false};
        }
    }
}

double inv_weibull_mgf(double t, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("inv_weibull_mgf: alpha must be positive");
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::domain_error("inv_weibull_mgf: t must be finite and >= 0");
    if (t == 0.0) return 1.0;
    // Same v = x^alpha substitution: E exp(-t/Y) = int_0^inf exp(-t v^{-1/alpha} - v) dv.
    const double inv_alpha = 1.0 / alpha;
    auto f = [t, inv_alpha](double v) {
        return std::exp(-t * std::pow(v, -inv_alpha) - v);
    };
    return integrate(f, 0.0, INFINITY, 1e-12).value;
}

}  // namespace pgev

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pgev/dist.hpp"
#include "pgev/quadrature.hpp"
#include "pgev/special.hpp"

using namespace pgev;

namespace {

constexpr double kE = 2.718281828459045235360287;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::vector<ModelParams> all_families() {
    return {
        ModelParams::pgev(0.0, 1.0, -0.5, +1),
        ModelParams::pgev(0.0, 1.0, 0.7, +1),
        ModelParams::pgev(0.3, 1.2, 0.4, -1),
        ModelParams::pgev(0.3, 1.2, -0.6, -1),
        ModelParams::gev(0.0, 1.0, -0.2),
        ModelParams::gev(1.0, 2.0, 0.3),
        ModelParams::gumbel(1.0, 2.0),
        ModelParams::pmax(Family::LogFrechet, 1.5),
        ModelParams::pmax(Family::LogWeibull, 2.0),
        ModelParams::pmax(Family::StdFrechet),
        ModelParams::pmax(Family::NegLogFrechet, 1.2),
        ModelParams::pmax(Family::NegLogWeibull, 2.0),
        ModelParams::pmax(Family::NegExponential),
    };
}

}  // namespace

TEST_CASE("family names round the full catalog") {
    CHECK(family_name(Family::Pgev) == "pgev");
    CHECK(family_name(Family::Gev) == "gev");
    CHECK(family_name(Family::Gumbel) == "gumbel");
    CHECK(family_name(Family::LogFrechet) == "log-frechet");
    CHECK(family_name(Family::NegExponential) == "neg-exponential");
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ModelParams::pgev(0.0, -1.0, 0.5, +1), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams::pgev(0.0, 1.0, 0.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams::gev(0.0, 0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams::pmax(Family::Gev), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams::pmax(Family::LogFrechet, -1.0), std::invalid_argument);
}

TEST_CASE("support intervals across both branches") {
    const auto up = support(ModelParams::pgev(0.0, 1.0, -1.0, +1));
    CHECK(up.lower == 0.0);
    CHECK(close(up.upper, kE, 1e-14));

    const auto fp = support(ModelParams::pgev(0.0, 1.0, 1.0, +1));
    CHECK(close(fp.lower, 1.0 / kE, 1e-15));
    CHECK(fp.upper == kInfinity);

    const auto un = support(ModelParams::pgev(0.0, 1.0, 1.0, -1));
    CHECK(close(un.lower, -kE, 1e-14));
    CHECK(un.upper == 0.0);

    const auto fn = support(ModelParams::pgev(0.0, 1.0, -1.0, -1));
    CHECK(fn.lower == -kInfinity);
    CHECK(close(fn.upper, -1.0 / kE, 1e-15));

    const auto gz = support(ModelParams::gev(0.0, 1.0, -0.5));
    CHECK(gz.lower == -kInfinity);
    CHECK(close(gz.upper, 2.0, 1e-14));
    CHECK(support(ModelParams::gumbel(0.0, 1.0)).lower == -kInfinity);
    CHECK(support(ModelParams::gumbel(0.0, 1.0)).upper == kInfinity);

    CHECK(support(ModelParams::pmax(Family::LogFrechet, 2.0)).lower == 1.0);
    CHECK(support(ModelParams::pmax(Family::LogWeibull, 2.0)).upper == 1.0);
    CHECK(support(ModelParams::pmax(Family::NegLogFrechet, 2.0)).lower == -1.0);
    CHECK(support(ModelParams::pmax(Family::NegLogWeibull, 2.0)).upper == -1.0);
    CHECK(support(ModelParams::pmax(Family::NegExponential)).upper == 0.0);
}

TEST_CASE("cdf pinned values") {
    // Positive branch, xi=1 at x=e: exp(-(1+log e)^{-1}) = e^{-1/2}.
    CHECK(close(cdf(ModelParams::pgev(0.0, 1.0, 1.0, +1), kE), std::exp(-0.5), 1e-15));
    // Uniform-reduction member at x=1: e^{-1}.
    CHECK(close(cdf(ModelParams::pgev(0.0, 1.0, -1.0, +1), 1.0), std::exp(-1.0), 1e-15));
    // Negative branch mirror at x=-1.
    CHECK(close(cdf(ModelParams::pgev(0.0, 1.0, 1.0, -1), -1.0), std::exp(-1.0), 1e-15));
    CHECK(close(cdf(ModelParams::gumbel(0.0, 1.0), 0.0), std::exp(-1.0), 1e-15));

    // Each stable law hits e^{-1} at its canonical point.
    CHECK(close(cdf(ModelParams::pmax(Family::LogFrechet, 1.0), kE), std::exp(-1.0), 1e-15));
    CHECK(close(cdf(ModelParams::pmax(Family::LogWeibull, 2.0), std::exp(-1.0)),
                std::exp(-1.0), 1e-15));
    CHECK(close(cdf(ModelParams::pmax(Family::StdFrechet), 1.0), std::exp(-1.0), 1e-15));
    CHECK(close(cdf(ModelParams::pmax(Family::NegLogFrechet, 1.0), -std::exp(-1.0)),
                std::exp(-1.0), 1e-15));
    CHECK(close(cdf(ModelParams::pmax(Family::NegLogWeibull, 2.0), -kE), std::exp(-1.0),
                1e-15));
    CHECK(close(cdf(ModelParams::pmax(Family::NegExponential), -1.0), std::exp(-1.0), 1e-15));
}

TEST_CASE("cdf saturates outside the support and is nondecreasing inside") {
    for (const auto& params : all_families()) {
        const auto sup = support(params);
        if (std::isfinite(sup.lower)) {
            CHECK(cdf(params, sup.lower - 0.5) == 0.0);
            CHECK(cdf(params, sup.lower) <= 1e-12);
        }
        if (std::isfinite(sup.upper)) {
            CHECK(cdf(params, sup.upper + 0.5) == 1.0);
            CHECK(cdf(params, sup.upper) >= 1.0 - 1e-12);
        }
        double prev = 0.0;
        for (int i = 1; i <= 19; ++i) {
            const double x = quantile(params, i / 20.0);
            const double c = cdf(params, x);
            CHECK(c >= prev);
            prev = c;
        }
    }
}

TEST_CASE("uniform member: cdf is exactly x/e on (0, e)") {
    const auto params = ModelParams::pgev(0.0, 1.0, -1.0, +1);
    double sup_gap = 0.0;
    for (int i = 1; i < 1000; ++i) {
        const double x = kE * i / 1000.0;
        sup_gap = std::max(sup_gap, std::abs(cdf(params, x) - x / kE));
    }
    CHECK(sup_gap < 1e-12);
    for (double x : {0.1, 0.9, 1.7, 2.5}) CHECK(close(pdf(params, x), 1.0 / kE, 1e-15));
}

TEST_CASE("pdf pinned values and consistency with cdf") {
    // (0,1,1,+1) at e: (1/e) * 2^{-2} * e^{-1/2} = e^{-3/2}/4.
    CHECK(close(pdf(ModelParams::pgev(0.0, 1.0, 1.0, +1), kE), std::exp(-1.5) / 4.0, 1e-15));

    for (const auto& params : all_families()) {
        for (double p : {0.2, 0.5, 0.8}) {
            const double x = quantile(params, p);
            const double h = 1e-6 * std::max(1.0, std::abs(x));
            const double fd = (cdf(params, x + h) - cdf(params, x - h)) / (2.0 * h);
            const double f = pdf(params, x);
            CHECK(close(fd, f, 1e-5 * std::max(1.0, f)));
            if (f > 0.0) CHECK(close(log_pdf(params, x), std::log(f), 1e-10));
        }
        const auto sup = support(params);
        if (std::isfinite(sup.lower)) CHECK(pdf(params, sup.lower - 0.25) == 0.0);
        if (std::isfinite(sup.upper)) CHECK(log_pdf(params, sup.upper + 0.25) == -kInfinity);
    }
}

TEST_CASE("pdf integrates to one over the support") {
    // Members whose tails decay fast enough that the whole support is
    // integrable in double precision.
    std::vector<ModelParams> full = {
        ModelParams::pgev(0.0, 1.0, -0.5, +1), ModelParams::pgev(0.0, 1.0, -1.5, +1),
        ModelParams::pgev(0.0, 1.0, -0.8, -1), ModelParams::gev(0.0, 1.0, 0.2),
        ModelParams::pmax(Family::NegLogWeibull, 2.0),
    };
    for (const auto& params : full) {
        const auto sup = support(params);
        // The density can diverge at a finite endpoint (integrably); treat
        // those measure-zero nodes as 0 so the adaptive rule can refine.
        const auto density = [&params](double x) {
            const double f = pdf(params, x);
            return std::isfinite(f) ? f : 0.0;
        };
        const auto q = integrate(density, sup.lower, sup.upper, 1e-10, 40000);
        CHECK(close(q.value, 1.0, 1e-6));
    }
}

TEST_CASE("pdf integrates to the mass between interior quantiles") {
    // Shape > 0 on a log scale gives log-Pareto tails: a visible fraction of
    // the mass sits beyond the largest (or tiniest) representable double, so
    // whole-support quadrature is ill-posed for these members. The density is
    // still checked against the cdf on a window holding 99.8% of the mass.
    std::vector<ModelParams> cases = {
        ModelParams::pgev(0.0, 1.0, -0.5, +1), ModelParams::pgev(0.0, 1.0, -1.5, +1),
        ModelParams::pgev(0.0, 1.0, 0.7, +1),  ModelParams::pgev(0.0, 1.0, 0.5, -1),
        ModelParams::pgev(0.0, 1.0, -0.8, -1), ModelParams::gev(0.0, 1.0, 0.2),
        ModelParams::pmax(Family::LogFrechet, 1.5),
        ModelParams::pmax(Family::NegLogWeibull, 2.0),
    };
    for (const auto& params : cases) {
        const double a = quantile(params, 0.001);
        const double b = quantile(params, 0.999);
        const auto q = integrate([&params](double x) { return pdf(params, x); }, a, b,
                                 1e-10, 40000);
        CHECK(close(q.value, 0.998, 1e-8));
    }
}

TEST_CASE("quantile pinned values and round trips") {
    // y = 1 lands on x = e^mu regardless of shape.
    for (double xi : {-1.5, -0.5, 0.5, 2.0})
        CHECK(close(quantile(ModelParams::pgev(0.0, 1.0, xi, +1), std::exp(-1.0)), 1.0,
                    1e-14));
    CHECK(close(quantile(ModelParams::pgev(0.0, 1.0, -0.5, +1), std::exp(-4.0)),
                std::exp(-2.0), 1e-15));
    CHECK(close(quantile(ModelParams::pmax(Family::NegExponential), std::exp(-1.0)), -1.0,
                1e-15));

    for (const auto& params : all_families()) {
        for (int i = 1; i <= 99; ++i) {
            const double p = i / 100.0;
            const double x = quantile(params, p);
            CHECK(close(cdf(params, x), p, 1e-10));
            if (pdf(params, x) > 1e-12)
                CHECK(close(quantile(params, cdf(params, x)), x,
                            1e-8 * std::max(1.0, std::abs(x))));
        }
        CHECK_THROWS_AS(quantile(params, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(quantile(params, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(quantile(params, -0.5), std::invalid_argument);
    }
}

TEST_CASE("sampling: deterministic per seed, matches moments and cdf") {
    const auto params = ModelParams::pgev(0.0, 1.0, -1.0, +1);
    const auto a = sample(params, 128, 7);
    const auto b = sample(params, 128, 7);
    REQUIRE(a.size() == 128);
    CHECK(a.values == b.values);
    const auto c = sample(params, 128, 8);
    CHECK(a.values != c.values);

    const std::size_t n = 100000;
    const auto big = sample(params, n, 42);
    double sum = 0.0;
    for (double v : big.values) sum += v;
    const double mean = sum / static_cast<double>(n);
    const double se = (kE / std::sqrt(12.0)) / std::sqrt(static_cast<double>(n));
    CHECK(close(mean, kE / 2.0, 3.0 * se));

    // Kolmogorov distance against the exact uniform(0, e) cdf.
    std::vector<double> sorted = big.values;
    std::sort(sorted.begin(), sorted.end());
    double dkw = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = sorted[i] / kE;
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
        const double lo = static_cast<double>(i) / static_cast<double>(n);
        dkw = std::max(dkw, std::max(std::abs(hi - u), std::abs(u - lo)));
    }
    CHECK(dkw < 0.01);

    for (const auto& any : all_families()) {
        const auto s = sample(any, 512, 3);
        const auto sup = support(any);
        for (double v : s.values) CHECK(sup.contains(v));
    }
}

TEST_CASE("moments: closed forms, frozen negative-branch values, undefined cases") {
    const auto uni = ModelParams::pgev(0.0, 1.0, -1.0, +1);
    CHECK(close(moment(uni, 1), kE / 2.0, 1e-9));
    CHECK(close(moment(uni, 2), kE * kE / 3.0, 1e-9));
    CHECK(close(variance(uni), kE * kE / 12.0, 1e-9));

    // (0,1,1,-1): E|X| = e * 2K_1(2), E X^2 = e^2 * 2 sqrt2 K_1(2 sqrt2),
    // var = EX^2 - (E X)^2 with E X = -E|X|. Values pinned independently.
    const auto neg = ModelParams::pgev(0.0, 1.0, 1.0, -1);
    CHECK(close(moment(neg, 1), 0.760389769926507, 1e-8));
    CHECK(close(moment(neg, 2), 1.032010800694940, 1e-8));
    CHECK(close(variance(neg), 0.453818198486054, 1e-8));

    // mu shift scales the k-th moment by e^{k mu}.
    const auto shifted = ModelParams::pgev(1.0, 1.0, -1.0, +1);
    CHECK(close(moment(shifted, 1), kE * moment(uni, 1), 1e-10 * kE * moment(uni, 1)));
    CHECK(close(moment(shifted, 2), kE * kE * moment(uni, 2),
                1e-10 * kE * kE * moment(uni, 2)));

    CHECK_THROWS_AS(moment(ModelParams::pgev(0.0, 1.0, 0.5, +1), 1), MomentUndefinedError);
    CHECK_THROWS_AS(moment(ModelParams::pgev(0.0, 1.0, -0.5, -1), 1), MomentUndefinedError);
    CHECK_THROWS_AS(moment(ModelParams::pgev(0.0, 1.0, 0.0, +1), 1), MomentUndefinedError);
    CHECK_THROWS_AS(moment(ModelParams::gev(0.0, 1.0, -0.5), 1), MomentUndefinedError);
    CHECK_THROWS_AS(moment(ModelParams::gumbel(0.0, 1.0), 1), MomentUndefinedError);
    CHECK_THROWS_AS(moment(ModelParams::pmax(Family::StdFrechet), 1), MomentUndefinedError);
    CHECK_THROWS_AS(moment(uni, 0), std::invalid_argument);
    CHECK_THROWS_AS(variance(ModelParams::gumbel(0.0, 1.0)), MomentUndefinedError);
}

TEST_CASE("entropy: closed forms and undefined cases") {
    CHECK(close(entropy(ModelParams::pgev(0.0, 1.0, -1.0, +1)), 1.0, 1e-12));
    CHECK(close(entropy(ModelParams::pgev(2.0, 3.0, -1.0, +1)), 2.0 + std::log(3.0) + 1.0,
                1e-12));
    CHECK(close(entropy(ModelParams::gumbel(0.0, 1.0)), 1.0 + kEulerGamma, 1e-12));
    CHECK(close(entropy(ModelParams::gumbel(1.0, 2.0)), std::log(2.0) + kEulerGamma + 1.0,
                1e-12));
    CHECK(close(entropy(ModelParams::gev(0.0, 1.0, -0.5)), 0.5 * kEulerGamma + 1.0, 1e-12));
    // Negative branch: H = H(GEV) + E log|X| with E log|X| = mu here.
    CHECK(close(entropy(ModelParams::pgev(0.0, 1.0, -1.0, -1)), 1.0, 1e-12));
    CHECK(close(entropy(ModelParams::pgev(1.0, 1.0, -1.0, -1)), 2.0, 1e-12));

    CHECK_THROWS_AS(entropy(ModelParams::pgev(0.0, 1.0, 0.5, +1)), EntropyUndefinedError);
    CHECK_THROWS_AS(entropy(ModelParams::gev(0.0, 1.0, 1.2)), EntropyUndefinedError);
    CHECK_THROWS_AS(entropy(ModelParams::pmax(Family::LogFrechet, 1.0)),
                    EntropyUndefinedError);

    // Differential entropy equals the quadrature integral -int f log f.
    for (const auto& params :
         {ModelParams::pgev(0.0, 1.0, -0.5, +1), ModelParams::pgev(2.0, 0.5, -1.5, -1)}) {
        const auto sup = support(params);
        const auto q = integrate(
            [&params](double x) {
                const double f = pdf(params, x);
                return std::isfinite(f) && f > 0.0 ? -f * std::log(f) : 0.0;
            },
            sup.lower, sup.upper, 1e-10, 40000);
        CHECK(close(q.value, entropy(params), 1e-6));
    }
}

TEST_CASE("xi near zero matches the Frechet/Weibull limit member") {
    // As xi -> 0 the positive branch tends to GEV(e^mu, sigma e^mu, sigma),
    // the negative branch to GEV(-e^mu, sigma e^mu, -sigma).
    const double mu = 0.3;
    for (double sigma : {1.0, 0.5}) {
        const auto limit_pos = ModelParams::gev(std::exp(mu), sigma * std::exp(mu), sigma);
        for (double xi : {1e-9, -1e-9}) {
            const auto p = ModelParams::pgev(mu, sigma, xi, +1);
            for (int i = 1; i <= 9; ++i) {
                const double x = quantile(limit_pos, i / 10.0);
                CHECK(close(cdf(p, x), cdf(limit_pos, x), 1e-6));
            }
        }
        const auto limit_neg = ModelParams::gev(-std::exp(mu), sigma * std::exp(mu), -sigma);
        for (double xi : {1e-9, -1e-9}) {
            const auto p = ModelParams::pgev(mu, sigma, xi, -1);
            for (int i = 1; i <= 9; ++i) {
                const double x = quantile(limit_neg, i / 10.0);
                CHECK(close(cdf(p, x), cdf(limit_neg, x), 1e-6));
            }
        }
    }
}

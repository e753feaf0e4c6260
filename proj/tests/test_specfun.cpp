#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pgev/gof.hpp"
#include "pgev/quadrature.hpp"
#include "pgev/rng.hpp"
#include "pgev/special.hpp"

using namespace pgev;

namespace {
bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("gamma function: pinned values, recurrence, poles") {
    CHECK(close(gamma_fn(1.0), 1.0, 1e-14));
    CHECK(close(gamma_fn(2.0), 1.0, 1e-14));
    CHECK(close(gamma_fn(5.0), 24.0, 1e-12));
    CHECK(close(gamma_fn(0.5), std::sqrt(M_PI), 1e-14));

    for (double x = 0.1; x < 8.0; x += 0.37) {
        const double ratio = gamma_fn(x + 1.0) / (x * gamma_fn(x));
        CHECK(close(ratio, 1.0, 1e-12));
    }

    CHECK(close(std::exp(log_gamma(7.3)), gamma_fn(7.3), 1e-9 * gamma_fn(7.3)));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-2.0), std::domain_error);
}

TEST_CASE("error function and normal cdf / quantile") {
    CHECK(erf_fn(0.0) == 0.0);
    // erf(1/2), independently computed to full precision.
    CHECK(close(erf_fn(0.5), 0.52049987781304654, 1e-12));
    CHECK(close(erf_fn(-0.5), -erf_fn(0.5), 1e-15));
    for (double x : {0.1, 0.7, 1.3, 2.5, 4.0})
        CHECK(close(erf_fn(x) + erfc_fn(x), 1.0, 1e-13));

    CHECK(std_normal_cdf(0.0) == 0.5);
    CHECK(close(std_normal_cdf(1.959963984540054), 0.975, 1e-12));
    // Phi(-1/sqrt(2)) = erfc(1/2)/2, the n=2 reduction constant in the gof module.
    CHECK(close(std_normal_cdf(-1.0 / std::sqrt(2.0)), 0.23975006109347674, 1e-12));

    CHECK(close(std_normal_quantile(0.975), 1.959963984540054, 1e-9));
    CHECK(std_normal_quantile(0.5) == 0.0);
    for (double p : {1e-6, 1e-3, 0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 1.0 - 1e-6})
        CHECK(close(std_normal_cdf(std_normal_quantile(p)), p, 1e-10));
    for (double x : {-5.0, -2.0, -0.5, 0.0, 0.5, 2.0, 5.0})
        CHECK(close(std_normal_quantile(std_normal_cdf(x)), x, 1e-8 * std::max(1.0, std::abs(x))));

    CHECK_THROWS_AS(std_normal_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(std_normal_quantile(1.0), std::domain_error);
}

TEST_CASE("generalized hypergeometric series") {
    // 0F0(x) = e^x.
    for (double x : {-5.0, -1.0, 0.0, 0.5, 3.0, 10.0}) {
        const double v = gen_hypergeom({{}, {}, x});
        CHECK(close(v, std::exp(x), 1e-12 * std::exp(std::abs(x))));
    }
    // 1F1(1;2;x) = (e^x - 1)/x.
    CHECK(close(gen_hypergeom({{1.0}, {2.0}, 1.0}), std::exp(1.0) - 1.0, 1e-10));
    // 2F1(1,1;2;x) = -log(1-x)/x.
    CHECK(close(gen_hypergeom({{1.0, 1.0}, {2.0}, 0.5}), 2.0 * std::log(2.0), 1e-10));

    CHECK_THROWS_AS(gen_hypergeom({{1.0}, {0.0}, 0.5}), std::domain_error);
    CHECK_THROWS_AS(gen_hypergeom({{1.0}, {-3.0}, 0.5}), std::domain_error);
    CHECK_THROWS_AS(gen_hypergeom({{1.0, 1.0}, {2.0}, 1.5}), std::runtime_error);
    CHECK_THROWS_AS(gen_hypergeom({{1.0, 1.0, 1.0}, {2.0}, 0.5}), std::runtime_error);
}

TEST_CASE("adaptive quadrature on reference integrals") {
    CHECK(close(integrate([](double x) { return x; }, 0.0, 1.0).value, 0.5, 1e-12));
    CHECK(close(integrate([](double x) { return std::exp(-x); }, 0.0,
                          std::numeric_limits<double>::infinity())
                    .value,
                1.0, 1e-10));
    CHECK(close(integrate([](double x) { return std::exp(-x * x); },
                          -std::numeric_limits<double>::infinity(),
                          std::numeric_limits<double>::infinity())
                    .value,
                std::sqrt(M_PI), 1e-10));
    // Integrable endpoint singularity.
    CHECK(close(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0).value, 2.0,
                1e-7));
    CHECK(integrate([](double x) { return x; }, 0.0, 1.0).evaluations > 0);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(
        integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0),
        std::runtime_error);
}

TEST_CASE("weibull mgf: closed forms, series vs quadrature, frozen oracle values") {
    // E e^{tY}, Y ~ Weibull(alpha): alpha=1 is exponential, M(t) = 1/(1+t)
    // (mgf argument here is -t, i.e. E e^{-tY} in the moment formulas).
    CHECK(weibull_mgf(1.0, 1.0).value == 0.5);
    CHECK(weibull_mgf(0.0, 3.7).value == 1.0);
    // M(1, 2) = 1 - (sqrt(pi)/2) e^{1/4} erfc(1/2), to full precision.
    CHECK(close(weibull_mgf(1.0, 2.0).value, 0.454358639234953, 1e-10));

    const std::vector<double> alphas = {1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0, 1.5, 2.0, 3.0};
    const std::vector<double> ts = {0.1, 0.5, 1.0, 2.0, 5.0};
    for (double a : alphas) {
        for (double t : ts) {
            const double auto_v = weibull_mgf(t, a).value;
            const double quad_v = weibull_mgf(t, a, MgfMethod::Quadrature).value;
            const double series_v = weibull_mgf(t, a, MgfMethod::Series).value;
            CHECK(close(auto_v, quad_v, 1e-8));
            CHECK(close(series_v, quad_v, 1e-8));
        }
    }

    // Monotone decreasing in t for fixed alpha.
    CHECK(weibull_mgf(0.5, 2.0).value > weibull_mgf(1.0, 2.0).value);
    CHECK(weibull_mgf(1.0, 2.0).value > weibull_mgf(2.0, 2.0).value);

    CHECK_THROWS_AS(weibull_mgf(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(weibull_mgf(1.0, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(weibull_mgf(-1.0, 2.0), std::domain_error);
}

TEST_CASE("inverse-weibull mgf: frozen Bessel-form values") {
    CHECK(inv_weibull_mgf(0.0, 1.0) == 1.0);
    // E e^{-t/Y}, Y ~ exp(1): t=1 gives 2 K_1(2), t=2 gives 2 sqrt(2) K_1(2 sqrt 2).
    CHECK(close(inv_weibull_mgf(1.0, 1.0), 0.279731763633045, 1e-9));
    CHECK(close(inv_weibull_mgf(2.0, 1.0), 0.139667474015293, 1e-9));
    CHECK(inv_weibull_mgf(0.5, 1.0) > inv_weibull_mgf(1.0, 1.0));
    CHECK_THROWS_AS(inv_weibull_mgf(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(inv_weibull_mgf(-0.5, 1.0), std::domain_error);
}

TEST_CASE("rng: determinism and distributional sanity") {
    Rng a(12345);
    Rng b(12345);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng c(12346);
    Rng d(12345);
    bool any_diff = false;
    for (int i = 0; i < 16; ++i) any_diff |= (c.next_u64() != d.next_u64());
    CHECK(any_diff);

    Rng u(777);
    const int n = 100000;
    double sum = 0.0;
    double sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = u.uniform();
        CHECK(v > 0.0);
        CHECK(v < 1.0);
        sum += v;
        sumsq += v * v;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(close(mean, 0.5, 0.005));
    CHECK(close(var, 1.0 / 12.0, 0.002));

    Rng g(778);
    double nsum = 0.0;
    double nsumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = g.normal();
        nsum += v;
        nsumsq += v * v;
    }
    const double nmean = nsum / n;
    const double nsd = std::sqrt(nsumsq / n - nmean * nmean);
    CHECK(std::abs(nmean) < 0.01);
    CHECK(close(nsd, 1.0, 0.01));
}

TEST_CASE("rng: normal draws pass the normality reduction check") {
    // 100 replications of n=100 standard normal samples; the modified
    // Anderson-Darling statistic should sit below the 5% point (0.752,
    // Stephens' table for the estimated-parameters normal case) in at
    // least 90% of replications.
    int below = 0;
    const int reps = 100;
    for (int r = 0; r < reps; ++r) {
        Rng rng(9000 + static_cast<std::uint64_t>(r));
        Dataset data;
        for (int i = 0; i < 100; ++i) data.values.push_back(rng.normal());
        const auto u = uniformize(data, [](double x) { return std_normal_cdf(x); });
        const GofReport rep = compute_statistics(u);
        if (rep.a_modified < 0.752) ++below;
    }
    CHECK(below >= 90);
}

#include <benchmark/benchmark.h>

#include <cmath>

#include "pgev/bayes.hpp"
#include "pgev/dist.hpp"
#include "pgev/gof.hpp"
#include "pgev/mle.hpp"
#include "pgev/special.hpp"

using namespace pgev;

namespace {

const ModelParams kParams = ModelParams::pgev(4.3614, 0.2853, -0.2386, +1);

void bm_cdf(benchmark::State& state) {
    double x = 60.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cdf(kParams, x));
        x = x < 120.0 ? x + 1.0 : 60.0;
    }
}
BENCHMARK(bm_cdf);

void bm_pdf(benchmark::State& state) {
    double x = 60.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdf(kParams, x));
        x = x < 120.0 ? x + 1.0 : 60.0;
    }
}
BENCHMARK(bm_pdf);

void bm_quantile(benchmark::State& state) {
    double p = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantile(kParams, p));
        p = p < 0.99 ? p + 0.01 : 0.01;
    }
}
BENCHMARK(bm_quantile);

void bm_sample_1k(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(kParams, 1000, seed++));
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(bm_sample_1k);

void bm_loglik_1k(benchmark::State& state) {
    const Dataset data = sample(kParams, 1000, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pgev_loglik(kParams, data));
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(bm_loglik_1k);

void bm_fit_mle_500(benchmark::State& state) {
    const Dataset data = sample(kParams, 500, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_mle(data, Family::Pgev));
    }
}
BENCHMARK(bm_fit_mle_500);

void bm_weibull_mgf_closed(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(weibull_mgf(1.0, 2.0, MgfMethod::Auto).value);
    }
}
BENCHMARK(bm_weibull_mgf_closed);

void bm_weibull_mgf_quadrature(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(weibull_mgf(1.0, 2.0, MgfMethod::Quadrature).value);
    }
}
BENCHMARK(bm_weibull_mgf_quadrature);

void bm_mcmc_100_iters(benchmark::State& state) {
    const Dataset data = sample(kParams, 200, 7);
    const Theta init{kParams.mu, std::log(kParams.sigma), kParams.shape};
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_mcmc(data, PriorSpec{}, ProposalSpec{0.01, 0.01, 0.005},
                                          100, init, seed++, Family::Pgev, +1, 0));
    }
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(bm_mcmc_100_iters);

void bm_gof_135(benchmark::State& state) {
    const Dataset data = sample(kParams, 135, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gof_test(data, kParams));
    }
}
BENCHMARK(bm_gof_135);

}  // namespace

BENCHMARK_MAIN();

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pgev/gof.hpp"
#include "pgev/mle.hpp"

using namespace pgev;

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("two observations always reduce to the same universal pair") {
    // With n = 2 the standardization fixes the normal scores at -+1/sqrt(2),
    // so the uniformized values do not depend on the data or the cdf.
    const double lo = 0.23975006109347674;
    const double hi = 0.7602499389065233;

    Dataset a;
    a.values = {1.3, 7.7};
    const auto ua = uniformize(a, [](double x) { return cdf(ModelParams::gumbel(0.0, 1.0), x); });
    REQUIRE(ua.size() == 2);
    CHECK(close(ua[0], lo, 1e-12));
    CHECK(close(ua[1], hi, 1e-12));

    Dataset b;
    b.values = {0.4, 0.9};
    const auto ub =
        uniformize(b, [](double x) { return cdf(ModelParams::pgev(0.0, 1.0, -0.5, +1), x); });
    CHECK(close(ub[0], lo, 1e-12));
    CHECK(close(ub[1], hi, 1e-12));
}

TEST_CASE("statistics at hand-computed values") {
    const std::vector<double> u{0.25, 0.5, 0.75};
    const GofReport report = compute_statistics(u);
    CHECK(close(report.w2, 1.0 / 24.0, 1e-9));
    CHECK(close(report.a2, 0.269430843372421, 1e-9));
    CHECK(close(report.c_modified, 7.0 / 144.0, 1e-9));
    CHECK(close(report.a_modified, 0.404146265058631, 1e-9));
    CHECK(report.n == 3);

    // Stephens' small-sample factors, exactly.
    const std::vector<double> v{0.1, 0.3, 0.55, 0.6, 0.92};
    const GofReport r5 = compute_statistics(v);
    CHECK(r5.c_modified == r5.w2 * (1.0 + 0.5 / 5.0));
    CHECK(r5.a_modified == r5.a2 * (1.0 + 0.75 / 5.0 + 2.25 / 25.0));
}

TEST_CASE("statistics are invariant under the reversal u -> 1-u") {
    const std::vector<double> u{0.1, 0.2, 0.4, 0.7};
    std::vector<double> rev;
    for (auto it = u.rbegin(); it != u.rend(); ++it) rev.push_back(1.0 - *it);
    const GofReport a = compute_statistics(u);
    const GofReport b = compute_statistics(rev);
    CHECK(close(a.w2, b.w2, 1e-14));
    CHECK(close(a.a2, b.a2, 1e-13));
}

TEST_CASE("uniformize output is sorted, in range, and validated") {
    const auto params = ModelParams::pgev(1.0, 0.5, -0.2, +1);
    const Dataset data = sample(params, 400, 6);
    const auto u = uniformize(data, [&](double x) { return cdf(params, x); });
    REQUIRE(u.size() == data.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(u[i] > 0.0);
        CHECK(u[i] < 1.0);
        if (i > 0) CHECK(u[i] >= u[i - 1]);
    }

    Dataset tiny;
    tiny.values = {1.0};
    CHECK_THROWS_AS(uniformize(tiny, [](double) { return 0.5; }), std::invalid_argument);
    Dataset two;
    two.values = {1.0, 2.0};
    CHECK_THROWS_AS(uniformize(two, std::function<double(double)>{}), std::invalid_argument);

    // A point outside the fitted support maps to cdf 1 and is named.
    Dataset outside;
    outside.values = {0.5, 3.0};
    const auto short_tail = ModelParams::pgev(0.0, 1.0, -1.0, +1);
    try {
        uniformize(outside, [&](double x) { return cdf(short_tail, x); });
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& err) {
        const std::string what = err.what();
        CHECK(what.find("observation 2") != std::string::npos);
    }

    // Ties collapse the normal-score variance.
    Dataset degenerate;
    degenerate.values = {2.0, 2.0, 2.0};
    CHECK_THROWS_AS(uniformize(degenerate, [&](double x) { return cdf(params, x); }),
                    std::invalid_argument);
}

TEST_CASE("compute_statistics rejects malformed input") {
    CHECK_THROWS_AS(compute_statistics({0.5}), std::invalid_argument);
    CHECK_THROWS_AS(compute_statistics({0.5, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(compute_statistics({0.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(compute_statistics({0.5, 1.0}), std::invalid_argument);
}

TEST_CASE("wrapper equals the manual composition") {
    const auto params = ModelParams::gumbel(0.0, 2.0);
    const Dataset data = sample(params, 50, 14);
    const GofReport direct = gof_test(data, params);
    const GofReport manual =
        compute_statistics(uniformize(data, [&](double x) { return cdf(params, x); }));
    CHECK(direct.w2 == manual.w2);
    CHECK(direct.a2 == manual.a2);
    CHECK(direct.c_modified == manual.c_modified);
    CHECK(direct.a_modified == manual.a_modified);
}

TEST_CASE("true model passes, wrong model fails") {
    const auto truth = ModelParams::pgev(1.0, 0.5, -0.2, +1);
    const Dataset data = sample(truth, 5000, 25);
    const GofReport good = gof_test(data, truth);
    CHECK(good.c_modified < 0.3);
    CHECK(good.a_modified < 1.5);

    // A shifted model is decisively rejected on the same data.
    const GofReport bad = gof_test(data, ModelParams::pgev(1.6, 0.5, -0.2, +1));
    CHECK(bad.a_modified > 0.752);
    CHECK(bad.c_modified > 0.126);
}

TEST_CASE("fitted-model statistics stay below the 5% normality criticals") {
    const auto truth = ModelParams::pgev(4.36, 0.285, -0.24, +1);
    int below_both = 0;
    const int reps = 30;
    for (int r = 0; r < reps; ++r) {
        const Dataset data = sample(truth, 135, 60000 + static_cast<std::uint64_t>(r));
        const FitResult fit = fit_mle(data, Family::Pgev);
        if (!fit.converged) continue;
        const GofReport report = gof_test(data, fit.params);
        if (report.c_modified < 0.126 && report.a_modified < 0.752) ++below_both;
    }
    CHECK(below_both >= 24);
}

#include "pgev/gof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pgev/special.hpp"

namespace pgev {

std::vector<double> uniformize(const Dataset& data,
                               const std::function<double(double)>& fitted_cdf) {
    const std::size_t n = data.values.size();
    if (n < 2) throw std::invalid_argument("uniformize: need at least two observations");
    if (!fitted_cdf) throw std::invalid_argument("uniformize: null cdf");

    std::vector<double> x = data.values;
    std::sort(x.begin(), x.end());

    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = fitted_cdf(x[i]);
        if (!(v > 0.0) || !(v < 1.0))
            throw std::invalid_argument(
                "uniformize: observation " + std::to_string(i + 1) + " (value " +
                std::to_string(x[i]) + ") maps to cdf value " + std::to_string(v) +
                " outside (0,1)");
        y[i] = std_normal_quantile(v);
    }

    // y inherits the data's order, so all-tied samples show up as a flat run.
    if (!(y.back() > y.front()))
        throw std::invalid_argument(
            "uniformize: degenerate sample, zero variance on the normal scale");

    double mean = 0.0;
    for (double yi : y) mean += yi;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double yi : y) ss += (yi - mean) * (yi - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sd > 0.0))
        throw std::invalid_argument("uniformize: degenerate sample, zero variance on the normal scale");

    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = std_normal_cdf((y[i] - mean) / sd);
    return u;
}

GofReport compute_statistics(const std::vector<double>& u) {
    const std::size_t n = u.size();
    if (n < 2) throw std::invalid_argument("compute_statistics: need at least two values");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(u[i] > 0.0) || !(u[i] < 1.0))
            throw std::invalid_argument("compute_statistics: value " + std::to_string(i + 1) +
                                        " outside (0,1)");
        if (i > 0 && u[i] < u[i - 1])
            throw std::invalid_argument("compute_statistics: values must be sorted ascending");
    }

    const double nd = static_cast<double>(n);
    double w2 = 1.0 / (12.0 * nd);
    double a_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double k = 2.0 * static_cast<double>(i + 1) - 1.0;  // 2i - 1, 1-based
        const double d = u[i] - k / (2.0 * nd);
        w2 += d * d;
        a_sum += k * std::log(u[i]) + (2.0 * nd + 1.0 - 2.0 * static_cast<double>(i + 1)) *
                                          std::log(1.0 - u[i]);
    }
    const double a2 = -nd - a_sum / nd;

    GofReport report;
    report.w2 = w2;
    report.a2 = a2;
    report.c_modified = w2 * (1.0 + 0.5 / nd);
    report.a_modified = a2 * (1.0 + 0.75 / nd + 2.25 / (nd * nd));
    report.n = n;
    return report;
}

GofReport gof_test(const Dataset& data, const ModelParams& params) {
    return compute_statistics(
        uniformize(data, [&params](double x) { return cdf(params, x); }));
}

}  // namespace pgev

#include "pgev/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pgev {

namespace {

double distance_inf(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          const std::vector<double>& start, const SimplexOptions& options) {
    const std::size_t dim = start.size();
    if (dim == 0) throw std::invalid_argument("nelder_mead: empty start point");

    std::vector<std::vector<double>> verts(dim + 1, start);
    for (std::size_t j = 0; j < dim; ++j) verts[j + 1][j] += options.initial_step;
    std::vector<double> fvals(dim + 1);
    for (std::size_t v = 0; v <= dim; ++v) fvals[v] = objective(verts[v]);

    std::vector<std::size_t> order(dim + 1);
    SimplexResult result;
    for (result.iterations = 0; result.iterations < options.max_iterations; ++result.iterations) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&fvals](std::size_t a, std::size_t b) { return fvals[a] < fvals[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[dim - 1];

        double diameter = 0.0;
        for (std::size_t v = 0; v <= dim; ++v)
            diameter = std::max(diameter, distance_inf(verts[v], verts[best]));
        const double spread = fvals[worst] - fvals[best];
        if (diameter < options.diameter_tol || spread < options.f_spread_tol) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t v = 0; v <= dim; ++v) {
            if (v == worst) continue;
            for (std::size_t j = 0; j < dim; ++j) centroid[j] += verts[v][j];
        }
        for (std::size_t j = 0; j < dim; ++j) centroid[j] /= static_cast<double>(dim);

        auto blend = [&centroid, &verts, worst, dim](double coeff) {
            std::vector<double> p(dim);
            for (std::size_t j = 0; j < dim; ++j)
                p[j] = centroid[j] + coeff * (centroid[j] - verts[worst][j]);
            return p;
        };

        const std::vector<double> reflected = blend(1.0);
        const double f_reflected = objective(reflected);
        if (f_reflected < fvals[best]) {
            const std::vector<double> expanded = blend(2.0);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                verts[worst] = expanded;
                fvals[worst] = f_expanded;
            } else {
                verts[worst] = reflected;
                fvals[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < fvals[second_worst]) {
            verts[worst] = reflected;
            fvals[worst] = f_reflected;
            continue;
        }

        const bool outside = f_reflected < fvals[worst];
        const std::vector<double> contracted = blend(outside ? 0.5 : -0.5);
        const double f_contracted = objective(contracted);
        if (f_contracted < (outside ? f_reflected : fvals[worst])) {
            verts[worst] = contracted;
            fvals[worst] = f_contracted;
            continue;
        }

        for (std::size_t v = 0; v <= dim; ++v) {
            if (v == best) continue;
            for (std::size_t j = 0; j < dim; ++j)
                verts[v][j] = verts[best][j] + 0.5 * (verts[v][j] - verts[best][j]);
            fvals[v] = objective(verts[v]);
        }
    }

    const std::size_t best =
        static_cast<std::size_t>(std::min_element(fvals.begin(), fvals.end()) - fvals.begin());
    result.x = verts[best];
    result.f = fvals[best];
    return result;
}

}  // namespace pgev

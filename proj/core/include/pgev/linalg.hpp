#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pgev {

// Dense symmetric matrix of order 2 or 3, enough for the information
// matrices this library produces.
struct SymMatrix {
    int n = 3;
    std::array<std::array<double, 3>, 3> a{};

    explicit SymMatrix(int order = 3) : n(order) {
        if (order < 1 || order > 3) throw std::invalid_argument("SymMatrix: order must be 1..3");
    }
    double& at(int i, int j) { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    double at(int i, int j) const {
        return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

inline SymMatrix symmetrized(const SymMatrix& m) {
    SymMatrix out(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out.at(i, j) = 0.5 * (m.at(i, j) + m.at(j, i));
    return out;
}

// Lower Cholesky factor; nullopt when the matrix is not positive definite.
inline std::optional<SymMatrix> cholesky(const SymMatrix& m) {
    SymMatrix l(m.n);
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = m.at(i, j);
            for (int k = 0; k < j; ++k) s -= l.at(i, k) * l.at(j, k);
            if (i == j) {
                if (!(s > 0.0) || !std::isfinite(s)) return std::nullopt;
                l.at(i, i) = std::sqrt(s);
            } else {
                l.at(i, j) = s / l.at(j, j);
            }
        }
    }
    return l;
}

// SPD inverse through the Cholesky factor; nullopt when not positive definite.
inline std::optional<SymMatrix> spd_inverse(const SymMatrix& m) {
    const auto l = cholesky(m);
    if (!l) return std::nullopt;
    SymMatrix inv(m.n);
    for (int col = 0; col < m.n; ++col) {
        std::array<double, 3> y{};
        for (int i = 0; i < m.n; ++i) {
            double s = i == col ? 1.0 : 0.0;
            for (int k = 0; k < i; ++k) s -= l->at(i, k) * y[static_cast<std::size_t>(k)];
            y[static_cast<std::size_t>(i)] = s / l->at(i, i);
        }
        for (int i = m.n - 1; i >= 0; --i) {
            double s = y[static_cast<std::size_t>(i)];
            for (int k = i + 1; k < m.n; ++k) s -= l->at(k, i) * inv.at(k, col);
            inv.at(i, col) = s / l->at(i, i);
        }
    }
    return symmetrized(inv);
}

inline double quadratic_form(const SymMatrix& m, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != m.n)
        throw std::invalid_argument("quadratic_form: dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            s += v[static_cast<std::size_t>(i)] * m.at(i, j) * v[static_cast<std::size_t>(j)];
    return s;
}

}  // namespace pgev

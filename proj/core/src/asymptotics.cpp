#include "pgev/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "pgev/quadrature.hpp"

namespace pgev {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double survival_point(const ParentDistribution& p, double u) {
    return p.survival ? p.survival(u) : 1.0 - p.cdf(u);
}

// Survival at the point sign * e^w without forming it when the parent offers
// a log-scale handle.
double survival_at_log(const ParentDistribution& p, double w, bool negative) {
    if (p.survival_log) return p.survival_log(w, negative);
    const double point = (negative ? -1.0 : 1.0) * std::exp(w);
    return survival_point(p, point);
}

double log_abs_quantile(const ParentDistribution& p, double prob) {
    if (p.log_quantile) return p.log_quantile(prob);
    return std::log(std::abs(p.quantile(prob)));
}

bool negative_branch(DoaCase c) { return c == DoaCase::L2PosXi || c == DoaCase::L2NegXi; }

bool toward_zero(DoaCase c) { return c == DoaCase::L1NegXi || c == DoaCase::L2NegXi; }

// z = 1 + xi log x (positive branch) or 1 - xi log(-x) (negative branch);
// z > 0 is exactly "x inside the standardized limit support".
double standardized_z(DoaCase c, double xi, double x) {
    if (negative_branch(c)) {
        if (!(x < 0.0)) throw std::domain_error("doa: negative-branch cases need x < 0");
        return 1.0 - xi * std::log(-x);
    }
    if (!(x > 0.0)) throw std::domain_error("doa: positive-branch cases need x > 0");
    return 1.0 + xi * std::log(x);
}

void check_case_shape(DoaCase c, double xi) {
    const bool needs_pos = c == DoaCase::L1PosXi || c == DoaCase::L2PosXi;
    if (needs_pos && !(xi > 0.0)) throw std::domain_error("doa: this case requires xi > 0");
    if (!needs_pos && !(xi < 0.0)) throw std::domain_error("doa: this case requires xi < 0");
}

// d_n from the proofs' quantile recipes, all positive once n is large enough
// for the parent's tail to be in play.
double norming_exponent(DoaCase c, const ParentDistribution& parent, long n) {
    if (n < 2) throw std::domain_error("power norming: n must be >= 2");
    const double prob = 1.0 - 1.0 / static_cast<double>(n);
    const double lq = log_abs_quantile(parent, prob);
    const double r = parent.right_endpoint;
    double d = 0.0;
    switch (c) {
        case DoaCase::L1PosXi: d = lq; break;
        case DoaCase::L1NegXi:
            if (!(r > 0.0) || !std::isfinite(r))
                throw std::domain_error("doa: L1NegXi needs a finite positive right endpoint");
            d = std::log(r) - lq;
            break;
        case DoaCase::L2PosXi: d = -lq; break;
        case DoaCase::L2NegXi:
            if (!(r < 0.0) || !std::isfinite(r))
                throw std::domain_error("doa: L2NegXi needs a finite negative right endpoint");
            d = lq - std::log(-r);
            break;
    }
    if (!(d > 0.0))
        throw std::domain_error("power norming: n too small for this parent's tail");
    return d;
}

double log_delta_from_exponent(DoaCase c, const ParentDistribution& parent, double d) {
    switch (c) {
        case DoaCase::L1PosXi: return d;
        case DoaCase::L1NegXi: return std::log(parent.right_endpoint) - d;
        case DoaCase::L2PosXi: return -d;
        case DoaCase::L2NegXi: return std::log(-parent.right_endpoint) + d;
    }
    return 0.0;
}

void fill_gap(ConvergenceTrace& trace) {
    const std::size_t n = trace.ratio_values.size();
    const std::size_t tail = std::max<std::size_t>(1, n / 3);
    double gap = 0.0;
    for (std::size_t i = n - tail; i < n; ++i)
        gap = std::max(gap, std::abs(trace.ratio_values[i] - trace.self_consistent_limit));
    trace.max_abs_gap = gap;
}

}  // namespace

Family pmax_family(int kind) {
    switch (kind) {
        case 1: return Family::LogFrechet;
        case 2: return Family::LogWeibull;
        case 3: return Family::StdFrechet;
        case 4: return Family::NegLogFrechet;
        case 5: return Family::NegLogWeibull;
        case 6: return Family::NegExponential;
    }
    throw std::invalid_argument("pmax_family: kind must be in 1..6");
}

double pmax_stable_cdf(int kind, double alpha, double x) {
    return cdf(ModelParams::pmax(pmax_family(kind), alpha), x);
}

DoaRatio doa_ratio(DoaCase doa_case, const ParentDistribution& parent, double xi, double x,
                   double t) {
    check_case_shape(doa_case, xi);
    if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("doa_ratio: t must be positive");
    const double z = standardized_z(doa_case, xi, x);
    if (!(z > 0.0))
        throw std::domain_error("doa_ratio: x outside the standardized limit support");

    const bool neg = negative_branch(doa_case);
    double num_w = 0.0;
    double den_w = 0.0;
    switch (doa_case) {
        case DoaCase::L1PosXi:
            num_w = t * z;
            den_w = t;
            break;
        case DoaCase::L1NegXi: {
            const double r = parent.right_endpoint;
            if (!(r > 0.0) || !std::isfinite(r))
                throw std::domain_error("doa_ratio: L1NegXi needs a finite positive endpoint");
            num_w = std::log(r) - t * z;
            den_w = std::log(r) - t;
            break;
        }
        case DoaCase::L2PosXi:
            num_w = -t * z;
            den_w = -t;
            break;
        case DoaCase::L2NegXi: {
            const double r = parent.right_endpoint;
            if (!(r < 0.0) || !std::isfinite(r))
                throw std::domain_error("doa_ratio: L2NegXi needs a finite negative endpoint");
            num_w = std::log(-r) + t * z;
            den_w = std::log(-r) + t;
            break;
        }
    }

    const double den = survival_at_log(parent, den_w, neg);
    if (!(den > 0.0))
        throw std::runtime_error("doa_ratio: survival at the denominator argument is 0");

    DoaRatio out;
    out.ratio = survival_at_log(parent, num_w, neg) / den;
    out.self_consistent_limit = std::pow(z, -1.0 / xi);
    // The source right sides, kept verbatim: the positive-branch ones coincide
    // with z^{-1/xi}; the negative-branch ones negate the wrong log and can
    // leave the real line (NaN).
    if (neg)
        out.stated_limit = std::pow(-(1.0 + xi * std::log(-x)), -1.0 / xi);
    else
        out.stated_limit = std::pow(1.0 + xi * std::log(x), -1.0 / xi);
    return out;
}

ConvergenceTrace doa_trace(DoaCase doa_case, const ParentDistribution& parent, double xi,
                           double x, std::vector<double> t_grid) {
    if (t_grid.empty()) {
        const bool shrink = toward_zero(doa_case);
        for (int k = 1; k <= 6; ++k)
            t_grid.push_back(shrink ? std::pow(10.0, -k) : std::pow(10.0, k));
    }
    ConvergenceTrace trace;
    for (double t : t_grid) {
        const DoaRatio r = doa_ratio(doa_case, parent, xi, x, t);
        trace.t_values.push_back(t);
        trace.ratio_values.push_back(r.ratio);
        trace.stated_limit = r.stated_limit;
        trace.self_consistent_limit = r.self_consistent_limit;
    }
    fill_gap(trace);
    return trace;
}

ConvergenceTrace von_mises_check(int vm_case, const ParentDistribution& parent, double alpha,
                                 const std::vector<double>& t_grid) {
    if (vm_case < 1 || vm_case > 6)
        throw std::invalid_argument("von_mises_check: case must be in 1..6");
    if (!parent.pdf) throw std::invalid_argument("von_mises_check: parent must supply a pdf");
    if (t_grid.empty()) throw std::invalid_argument("von_mises_check: empty grid");

    const double r = parent.right_endpoint;
    ConvergenceTrace trace;
    for (double x : t_grid) {
        const double s = survival_point(parent, x);
        const double f = parent.pdf(x);
        double ratio = 0.0;
        switch (vm_case) {
            case 1: ratio = x * f * std::log(x) / s; break;
            case 2: ratio = x * f * std::log(r / x) / s; break;
            case 4: ratio = x * f * std::log(-x) / s; break;
            case 5: ratio = x * f * std::log(r / x) / s; break;
            case 3:
            case 6: {
                const auto inner = integrate(
                    [&parent](double t) { return survival_point(parent, t) / t; }, x, r, 1e-10);
                ratio = x * f / (s * s) * inner.value;
                break;
            }
        }
        trace.t_values.push_back(x);
        trace.ratio_values.push_back(ratio);
    }
    trace.self_consistent_limit = (vm_case == 3 || vm_case == 6) ? 1.0 : alpha;
    trace.stated_limit = trace.self_consistent_limit;
    fill_gap(trace);
    return trace;
}

NormingPair power_norming_constants(DoaCase doa_case, const ParentDistribution& parent,
                                    double xi, long n) {
    check_case_shape(doa_case, xi);
    const double d = norming_exponent(doa_case, parent, n);
    NormingPair pair;
    pair.delta = std::exp(log_delta_from_exponent(doa_case, parent, d));
    pair.beta = std::abs(xi) * d;
    return pair;
}

ConvergenceTrace pmax_convergence(const ParentDistribution& parent, DoaCase doa_case, double xi,
                                  double x, const std::vector<long>& n_grid,
                                  const std::function<NormingPair(long)>& norming, double target) {
    const bool neg = negative_branch(doa_case);
    const double z = standardized_z(doa_case, xi, x);
    if (!(z > 0.0))
        throw std::domain_error("pmax_convergence: x outside the standardized limit support");
    const double lx = std::log(std::abs(x));

    ConvergenceTrace trace;
    for (long n : n_grid) {
        double log_delta = 0.0;
        double beta = 0.0;
        if (norming) {
            const NormingPair pair = norming(n);
            log_delta = std::log(pair.delta);
            beta = pair.beta;
        } else {
            check_case_shape(doa_case, xi);
            const double d = norming_exponent(doa_case, parent, n);
            log_delta = log_delta_from_exponent(doa_case, parent, d);
            beta = std::abs(xi) * d;
        }
        // Pr(power-normed max <= x) = F(sign * delta |x|^beta)^n, evaluated
        // through the survival for precision near 1.
        const double s = survival_at_log(parent, log_delta + beta * lx, neg);
        const double value = std::exp(static_cast<double>(n) * std::log1p(-s));
        trace.t_values.push_back(static_cast<double>(n));
        trace.ratio_values.push_back(value);
    }

    if (std::isnan(target))
        target = cdf(ModelParams::pgev(0.0, 1.0, xi, neg ? -1 : +1), x);
    trace.self_consistent_limit = target;
    trace.stated_limit = target;
    fill_gap(trace);
    return trace;
}

double phi1_ratio(const ParentDistribution& parent, const std::function<double(double)>& u,
                  double y, double t) {
    const double den = survival_point(parent, t);
    if (!(den > 0.0)) throw std::runtime_error("phi1_ratio: survival at t is 0");
    return survival_point(parent, t * std::exp(y * u(t))) / den;
}

ParentDistribution log_tail_parent(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("log_tail_parent: alpha must be positive");
    ParentDistribution p;
    p.name = "log-tail";
    p.right_endpoint = kInf;
    p.cdf = [alpha](double u) { return u <= std::exp(1.0) ? 0.0 : 1.0 - std::pow(std::log(u), -alpha); };
    p.survival = [alpha](double u) { return u <= std::exp(1.0) ? 1.0 : std::pow(std::log(u), -alpha); };
    p.survival_log = [alpha](double w, bool negv) {
        if (negv) return 1.0;
        return w <= 1.0 ? 1.0 : std::pow(w, -alpha);
    };
    p.pdf = [alpha](double u) {
        return u <= std::exp(1.0) ? 0.0 : alpha * std::pow(std::log(u), -alpha - 1.0) / u;
    };
    p.quantile = [alpha](double prob) { return std::exp(std::pow(1.0 - prob, -1.0 / alpha)); };
    p.log_quantile = [alpha](double prob) { return std::pow(1.0 - prob, -1.0 / alpha); };
    return p;
}

ParentDistribution k2_tail_parent(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("k2_tail_parent: alpha must be positive");
    ParentDistribution p;
    p.name = "k2-tail";
    p.right_endpoint = 1.0;
    p.cdf = [alpha](double u) {
        if (u <= std::exp(-1.0)) return 0.0;
        if (u >= 1.0) return 1.0;
        return 1.0 - std::pow(-std::log(u), alpha);
    };
    p.survival = [alpha](double u) {
        if (u <= std::exp(-1.0)) return 1.0;
        if (u >= 1.0) return 0.0;
        return std::pow(-std::log(u), alpha);
    };
    p.survival_log = [alpha](double w, bool negv) {
        if (negv) return 1.0;
        if (w <= -1.0) return 1.0;
        if (w >= 0.0) return 0.0;
        return std::pow(-w, alpha);
    };
    p.pdf = [alpha](double u) {
        if (u <= std::exp(-1.0) || u >= 1.0) return 0.0;
        return alpha * std::pow(-std::log(u), alpha - 1.0) / u;
    };
    p.quantile = [alpha](double prob) { return std::exp(-std::pow(1.0 - prob, 1.0 / alpha)); };
    p.log_quantile = [alpha](double prob) { return -std::pow(1.0 - prob, 1.0 / alpha); };
    return p;
}

ParentDistribution pareto_parent() {
    ParentDistribution p;
    p.name = "pareto";
    p.right_endpoint = kInf;
    p.cdf = [](double u) { return u <= 1.0 ? 0.0 : 1.0 - 1.0 / u; };
    p.survival = [](double u) { return u <= 1.0 ? 1.0 : 1.0 / u; };
    p.survival_log = [](double w, bool negv) {
        if (negv) return 1.0;
        return w <= 0.0 ? 1.0 : std::exp(-w);
    };
    p.pdf = [](double u) { return u <= 1.0 ? 0.0 : 1.0 / (u * u); };
    p.quantile = [](double prob) { return 1.0 / (1.0 - prob); };
    p.log_quantile = [](double prob) { return -std::log(1.0 - prob); };
    return p;
}

ParentDistribution k4_tail_parent(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("k4_tail_parent: alpha must be positive");
    ParentDistribution p;
    p.name = "k4-tail";
    p.right_endpoint = 0.0;
    p.cdf = [alpha](double u) {
        if (u <= -std::exp(-1.0)) return 0.0;
        if (u >= 0.0) return 1.0;
        return 1.0 - std::pow(-std::log(-u), -alpha);
    };
    p.survival = [alpha](double u) {
        if (u <= -std::exp(-1.0)) return 1.0;
        if (u >= 0.0) return 0.0;
        return std::pow(-std::log(-u), -alpha);
    };
    p.survival_log = [alpha](double w, bool negv) {
        if (!negv) return 0.0;
        return w >= -1.0 ? 1.0 : std::pow(-w, -alpha);
    };
    p.pdf = [alpha](double u) {
        if (u <= -std::exp(-1.0) || u >= 0.0) return 0.0;
        return alpha * std::pow(-std::log(-u), -alpha - 1.0) / -u;
    };
    p.quantile = [alpha](double prob) {
        return -std::exp(-std::pow(1.0 - prob, -1.0 / alpha));
    };
    p.log_quantile = [alpha](double prob) { return -std::pow(1.0 - prob, -1.0 / alpha); };
    return p;
}

ParentDistribution k5_tail_parent(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("k5_tail_parent: alpha must be positive");
    ParentDistribution p;
    p.name = "k5-tail";
    p.right_endpoint = -1.0;
    p.cdf = [alpha](double u) {
        if (u <= -std::exp(1.0)) return 0.0;
        if (u >= -1.0) return 1.0;
        return 1.0 - std::pow(std::log(-u), alpha);
    };
    p.survival = [alpha](double u) {
        if (u <= -std::exp(1.0)) return 1.0;
        if (u >= -1.0) return 0.0;
        return std::pow(std::log(-u), alpha);
    };
    p.survival_log = [alpha](double w, bool negv) {
        if (!negv) return 0.0;
        if (w >= 1.0) return 1.0;
        if (w <= 0.0) return 0.0;
        return std::pow(w, alpha);
    };
    p.pdf = [alpha](double u) {
        if (u <= -std::exp(1.0) || u >= -1.0) return 0.0;
        return alpha * std::pow(std::log(-u), alpha - 1.0) / -u;
    };
    p.quantile = [alpha](double prob) { return -std::exp(std::pow(1.0 - prob, 1.0 / alpha)); };
    p.log_quantile = [alpha](double prob) { return std::pow(1.0 - prob, 1.0 / alpha); };
    return p;
}

ParentDistribution uniform_parent(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("uniform_parent: needs a < b");
    ParentDistribution p;
    p.name = "uniform";
    p.right_endpoint = b;
    p.cdf = [a, b](double u) {
        if (u <= a) return 0.0;
        if (u >= b) return 1.0;
        return (u - a) / (b - a);
    };
    p.survival = [a, b](double u) {
        if (u <= a) return 1.0;
        if (u >= b) return 0.0;
        return (b - u) / (b - a);
    };
    if (a == 0.0 && b == 1.0) {
        // Exact survival of e^w near the endpoint, where 1 - e^w cancels.
        p.survival_log = [](double w, bool negv) {
            if (negv) return 1.0;
            return w >= 0.0 ? 0.0 : -std::expm1(w);
        };
    }
    p.pdf = [a, b](double u) { return (u <= a || u >= b) ? 0.0 : 1.0 / (b - a); };
    p.quantile = [a, b](double prob) { return a + prob * (b - a); };
    return p;
}

ParentDistribution inv_log_neg_parent() {
    ParentDistribution p;
    p.name = "inv-log-neg";
    p.right_endpoint = 0.0;
    p.cdf = [](double u) {
        if (u <= -1.0) return 0.0;
        if (u >= 0.0) return 1.0;
        return 1.0 - 1.0 / (1.0 - std::log(-u));
    };
    p.survival = [](double u) {
        if (u <= -1.0) return 1.0;
        if (u >= 0.0) return 0.0;
        return 1.0 / (1.0 - std::log(-u));
    };
    p.survival_log = [](double w, bool negv) {
        if (!negv) return 0.0;
        return w >= 0.0 ? 1.0 : 1.0 / (1.0 - w);
    };
    p.pdf = [](double u) {
        if (u <= -1.0 || u >= 0.0) return 0.0;
        const double denom = 1.0 - std::log(-u);
        return 1.0 / (denom * denom) / -u;
    };
    p.quantile = [](double prob) { return -std::exp(1.0 - 1.0 / (1.0 - prob)); };
    p.log_quantile = [](double prob) { return 1.0 - 1.0 / (1.0 - prob); };
    return p;
}

ParentDistribution log_ratio_neg_parent() {
    ParentDistribution p;
    p.name = "log-ratio-neg";
    p.right_endpoint = -1.0;
    p.cdf = [](double u) {
        if (u >= -1.0) return 1.0;
        return 1.0 / (1.0 + std::log(-u));
    };
    p.survival = [](double u) {
        if (u >= -1.0) return 0.0;
        const double w = std::log(-u);
        return w / (1.0 + w);
    };
    p.survival_log = [](double w, bool negv) {
        if (!negv) return 0.0;
        return w <= 0.0 ? 0.0 : w / (1.0 + w);
    };
    p.pdf = [](double u) {
        if (u >= -1.0) return 0.0;
        const double denom = 1.0 + std::log(-u);
        return 1.0 / (denom * denom) / -u;
    };
    p.quantile = [](double prob) { return -std::exp(1.0 / prob - 1.0); };
    p.log_quantile = [](double prob) { return 1.0 / prob - 1.0; };
    return p;
}

}  // namespace pgev

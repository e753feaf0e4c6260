#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "pgev/dist.hpp"

namespace pgev {

// A parent distribution supplied as function handles. cdf and quantile are
// required by most checks; pdf only by the von Mises conditions. The optional
// handles exist for numerical range and precision: survival avoids the 1-cdf
// cancellation, survival_log(w, negative) evaluates the survival at +e^w or
// -e^w without materializing the point (power-normed arguments reach e^{1e6}),
// and log_quantile(p) returns log|F^<-(p)| for the same reason.
struct ParentDistribution {
    std::string name;
    double right_endpoint = 0.0;
    std::function<double(double)> cdf;
    std::function<double(double)> pdf;
    std::function<double(double)> quantile;
    std::function<double(double)> survival;
    std::function<double(double, bool)> survival_log;
    std::function<double(double)> log_quantile;
};

// Ratio evaluations along a grid heading toward a limit. stated_limit is the
// source theorem's right side taken literally (it can be NaN where that
// expression leaves the real line); self_consistent_limit is the value the
// domain-of-attraction target actually demands, -log of the standardized
// limit cdf. max_abs_gap measures |ratio - self_consistent_limit| over the
// tail third of the grid.
struct ConvergenceTrace {
    std::vector<double> t_values;
    std::vector<double> ratio_values;
    double stated_limit = 0.0;
    double self_consistent_limit = 0.0;
    double max_abs_gap = 0.0;
};

// The four tail regimes of the power-normed domain-of-attraction theorems:
// positive branch with xi > 0 (right endpoint infinity), positive branch with
// xi < 0 (finite positive right endpoint), negative branch with xi > 0 (right
// endpoint zero), negative branch with xi < 0 (negative right endpoint).
enum class DoaCase { L1PosXi, L1NegXi, L2PosXi, L2NegXi };

struct DoaRatio {
    double ratio;
    double stated_limit;
    double self_consistent_limit;
};

// Standardized power-max stable law number kind in 1..6; alpha is ignored for
// kinds 3 and 6.
Family pmax_family(int kind);
double pmax_stable_cdf(int kind, double alpha, double x);

// Finite-t left side of the domain-of-attraction criterion at one (x, t).
// With z = 1 + xi log|x| (sign-adjusted per branch) the evaluation points are
//   L1PosXi:  S(e^{tz}) / S(e^t)                as t -> infinity
//   L1NegXi:  S(r e^{-tz}) / S(r e^{-t})        as t -> 0+
//   L2PosXi:  S(-e^{-tz}) / S(-e^{-t})          as t -> infinity
//   L2NegXi:  S(r e^{tz}) / S(r e^t)            as t -> 0+
// and the self-consistent limit is z^{-1/xi}. x must lie inside the support
// of the standardized limit law (z > 0); the survival at the denominator
// argument must be positive.
DoaRatio doa_ratio(DoaCase doa_case, const ParentDistribution& parent, double xi, double x,
                   double t);

// doa_ratio along a grid; an empty grid selects the default for the case's
// limit direction: {10, 10^2, ..., 10^6} toward infinity for the unbounded
// cases, {1e-1, ..., 1e-6} toward 0+ for the bounded-endpoint ones.
ConvergenceTrace doa_trace(DoaCase doa_case, const ParentDistribution& parent, double xi,
                           double x, std::vector<double> t_grid = {});

// Density-ratio sufficient conditions for membership in the six power-max
// domains, evaluated along t_grid (points approaching infinity or the right
// endpoint as the case demands). Cases 1, 2, 4, 5 converge to alpha; cases 3
// and 6 to 1, with the inner integral of the survival done by quadrature.
ConvergenceTrace von_mises_check(int vm_case, const ParentDistribution& parent, double alpha,
                                 const std::vector<double>& t_grid);

struct NormingPair {
    double delta;
    double beta;
};

// Power-norming pair (delta_n, beta_n) built from d_n = log of the quantile
// transform appropriate to the case; beta_n = |xi| d_n and delta_n is
// |F^<-(1-1/n)| in every case. Overflows double range for parents whose
// quantiles explode (use pmax_convergence, which works in log space).
NormingPair power_norming_constants(DoaCase doa_case, const ParentDistribution& parent,
                                    double xi, long n);

// F^n at the power-normalized point against the limit-law cdf. norming
// overrides the built-in constants (e.g. a stable law's natural pair);
// target overrides the standardized limit value when given (NaN = derive it
// from the case and xi).
ConvergenceTrace pmax_convergence(const ParentDistribution& parent, DoaCase doa_case, double xi,
                                  double x, const std::vector<long>& n_grid,
                                  const std::function<NormingPair(long)>& norming = {},
                                  double target = std::numeric_limits<double>::quiet_NaN());

// One evaluation of the Frechet-type criterion S(t e^{y u(t)})/S(t), whose
// limit as t approaches the right endpoint is e^{-y} for members of the
// standard Frechet power domain.
double phi1_ratio(const ParentDistribution& parent, const std::function<double(double)>& u,
                  double y, double t);

// Ready-made parents with exact tail algebra, one per regime:
// survival (log u)^-alpha above e; in the L1PosXi domain with xi = 1/alpha.
ParentDistribution log_tail_parent(double alpha);
// survival (-log u)^alpha on (1/e, 1); L1NegXi, xi = -1/alpha.
ParentDistribution k2_tail_parent(double alpha);
// survival 1/u above 1; the classic Frechet-domain member.
ParentDistribution pareto_parent();
// survival (-log(-u))^-alpha on (-1/e, 0); L2PosXi, xi = 1/alpha.
ParentDistribution k4_tail_parent(double alpha);
// survival (log(-u))^alpha on (-e, -1); L2NegXi, xi = -1/alpha.
ParentDistribution k5_tail_parent(double alpha);
// uniform on (a, b).
ParentDistribution uniform_parent(double a, double b);
// survival 1/(1 - log(-u)) on (-1, 0); converges (not exactly) to the
// L2PosXi target with xi = 1.
ParentDistribution inv_log_neg_parent();
// survival log(-u)/(1 + log(-u)) below -1; converges to L2NegXi, xi = -1.
ParentDistribution log_ratio_neg_parent();

}  // namespace pgev

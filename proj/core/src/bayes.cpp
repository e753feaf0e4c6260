#include "pgev/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pgev/mle.hpp"
#include "pgev/rng.hpp"

namespace pgev {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_bayes_family(Family family) {
    if (family != Family::Pgev && family != Family::Gev)
        throw std::invalid_argument("bayes: family must have a free shape (pgev or gev)");
}

double log_normal_density(double x, double variance) {
    constexpr double kTwoPi = 6.283185307179586476925287;
    return -0.5 * std::log(kTwoPi * variance) - x * x / (2.0 * variance);
}

ModelParams params_from_theta(Family family, int support_sign, const Theta& theta) {
    const double sigma = std::exp(theta[1]);
    if (family == Family::Pgev) return ModelParams::pgev(theta[0], sigma, theta[2], support_sign);
    return ModelParams::gev(theta[0], sigma, theta[2]);
}

std::size_t resolve_burn_in(std::optional<std::size_t> burn_in, long n_iter) {
    const auto fallback = static_cast<std::size_t>(n_iter) / 2;
    const std::size_t b = burn_in.value_or(fallback);
    if (b >= static_cast<std::size_t>(n_iter))
        throw std::invalid_argument("bayes: burn_in must be smaller than the iteration count");
    return b;
}

}  // namespace

double log_posterior(const Theta& theta, const Dataset& data, const PriorSpec& prior,
                     Family family, int support_sign) {
    check_bayes_family(family);
    if (!(prior.v_mu > 0.0 && prior.v_eta > 0.0 && prior.v_xi > 0.0))
        throw std::invalid_argument("bayes: prior variances must be positive");
    if (!std::isfinite(theta[0]) || !std::isfinite(theta[1]) || !std::isfinite(theta[2]))
        return -kInf;

    double ll = 0.0;
    if (!data.empty()) {
        ModelParams p{};
        try {
            p = params_from_theta(family, support_sign, theta);
        } catch (const std::invalid_argument&) {
            return -kInf;
        }
        ll = pgev_loglik(p, data);
        if (ll == -kInf) return -kInf;
    }
    return ll + log_normal_density(theta[0], prior.v_mu) +
           log_normal_density(theta[1], prior.v_eta) + log_normal_density(theta[2], prior.v_xi);
}

double acceptance_prob(double current, double proposed) {
    if (current == -kInf && proposed == -kInf)
        throw std::runtime_error("acceptance_prob: chain started outside the support");
    if (proposed >= current) return 1.0;
    return std::exp(proposed - current);
}

Chain run_mcmc_target(const std::function<double(const Theta&)>& log_target,
                      const ProposalSpec& proposal, long n_iter, const Theta& init,
                      std::uint64_t seed, std::optional<std::size_t> burn_in) {
    if (n_iter < 1) throw std::invalid_argument("run_mcmc: n_iter must be >= 1");
    if (!(proposal.w_mu > 0.0 && proposal.w_eta > 0.0 && proposal.w_xi > 0.0))
        throw std::invalid_argument("run_mcmc: proposal variances must be positive");

    Theta theta = init;
    double lp = log_target(theta);
    if (!std::isfinite(lp))
        throw std::invalid_argument("run_mcmc: init has non-finite log target");

    const std::array<double, 3> step{std::sqrt(proposal.w_mu), std::sqrt(proposal.w_eta),
                                     std::sqrt(proposal.w_xi)};

    Chain chain;
    chain.seed = seed;
    chain.burn_in = resolve_burn_in(burn_in, n_iter);
    chain.draws.reserve(static_cast<std::size_t>(n_iter));
    chain.accept_flags.reserve(static_cast<std::size_t>(n_iter));

    Rng rng(seed);
    for (long iter = 0; iter < n_iter; ++iter) {
        std::array<std::uint8_t, 3> flags{0, 0, 0};
        for (std::size_t k = 0; k < 3; ++k) {
            Theta star = theta;
            star[k] += step[k] * rng.normal();
            const double lp_star = log_target(star);
            const double omega = acceptance_prob(lp, lp_star);
            if (rng.uniform() < omega) {
                theta = star;
                lp = lp_star;
                flags[k] = 1;
                ++chain.acceptance_counts[k];
            }
        }
        chain.draws.push_back(theta);
        chain.accept_flags.push_back(flags);
    }
    return chain;
}

Chain run_mcmc(const Dataset& data, const PriorSpec& prior, const ProposalSpec& proposal,
               long n_iter, const Theta& init, std::uint64_t seed, Family family,
               int support_sign, std::optional<std::size_t> burn_in) {
    check_bayes_family(family);
    Chain chain = run_mcmc_target(
        [&](const Theta& theta) {
            return log_posterior(theta, data, prior, family, support_sign);
        },
        proposal, n_iter, init, seed, burn_in);
    chain.family = family;
    chain.support_sign = support_sign;
    return chain;
}

ProposalSpec tune_proposal(const Dataset& data, const PriorSpec& prior, const Theta& init,
                           std::uint64_t seed, Family family, int support_sign) {
    constexpr long kPilotIters = 250;
    constexpr int kMaxRounds = 20;
    constexpr double kScale = 1.8;

    ProposalSpec spec;
    for (int round = 0; round < kMaxRounds; ++round) {
        const Chain pilot = run_mcmc(data, prior, spec, kPilotIters, init, seed + round, family,
                                     support_sign, 0);
        bool all_ok = true;
        double* const ws[3] = {&spec.w_mu, &spec.w_eta, &spec.w_xi};
        for (std::size_t k = 0; k < 3; ++k) {
            const double rate =
                static_cast<double>(pilot.acceptance_counts[k]) / static_cast<double>(kPilotIters);
            // Too many acceptances means steps are timid: widen; too few,
            // shrink. Scaling the sd by 1.8 scales the variance by 1.8^2.
            if (rate > 0.5) {
                *ws[k] *= kScale * kScale;
                all_ok = false;
            } else if (rate < 0.2) {
                *ws[k] /= kScale * kScale;
                all_ok = false;
            }
        }
        if (all_ok) break;
    }
    return spec;
}

double predictive_cdf(const Chain& chain, double y) {
    if (chain.burn_in >= chain.size())
        throw std::invalid_argument("predictive_cdf: no draws past burn-in");
    double total = 0.0;
    std::size_t count = 0;
    for (std::size_t i = chain.burn_in; i < chain.size(); ++i) {
        total += cdf(params_from_theta(chain.family, chain.support_sign, chain.draws[i]), y);
        ++count;
    }
    return total / static_cast<double>(count);
}

double return_level(const Chain& chain, double m) {
    if (!(m > 1.0)) throw std::invalid_argument("return_level: m must exceed 1");
    const double p = 1.0 - 1.0 / m;

    double lo = kInf;
    double hi = -kInf;
    for (std::size_t i = chain.burn_in; i < chain.size(); ++i) {
        const double q =
            quantile(params_from_theta(chain.family, chain.support_sign, chain.draws[i]), p);
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw std::runtime_error("return_level: could not bracket the predictive quantile");

    // The predictive cdf is a mixture of the per-draw cdfs, so its p-quantile
    // lies within the span of the per-draw p-quantiles. Pad the span so that
    // rounding in quantile/cdf round trips cannot break the bracket.
    const double pad = 1e-9 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    lo -= pad;
    hi += pad;
    if (predictive_cdf(chain, lo) > p || predictive_cdf(chain, hi) < p)
        throw std::runtime_error("return_level: bracket failure on the predictive cdf");
    while (hi - lo > 1e-8 * std::max(1.0, std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        (predictive_cdf(chain, mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::array<ParamSummary, 3> chain_summary(const Chain& chain) {
    if (chain.burn_in >= chain.size())
        throw std::invalid_argument("chain_summary: no draws past burn-in");
    const std::size_t kept = chain.size() - chain.burn_in;

    std::array<ParamSummary, 3> out{};
    for (std::size_t k = 0; k < 3; ++k) {
        double mean = 0.0;
        for (std::size_t i = chain.burn_in; i < chain.size(); ++i) {
            const double v = k == 1 ? std::exp(chain.draws[i][k]) : chain.draws[i][k];
            mean += v;
        }
        mean /= static_cast<double>(kept);
        double ss = 0.0;
        for (std::size_t i = chain.burn_in; i < chain.size(); ++i) {
            const double v = k == 1 ? std::exp(chain.draws[i][k]) : chain.draws[i][k];
            ss += (v - mean) * (v - mean);
        }
        out[k].mean = mean;
        out[k].sd = kept > 1 ? std::sqrt(ss / static_cast<double>(kept - 1)) : 0.0;
        out[k].acceptance_rate =
            static_cast<double>(chain.acceptance_counts[k]) / static_cast<double>(chain.size());
    }
    return out;
}

void export_chain_csv(const Chain& chain, std::ostream& out) {
    out << "iter,mu,eta,xi,accepted_mu,accepted_eta,accepted_xi\n";
    out.precision(17);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        out << i << ',' << chain.draws[i][0] << ',' << chain.draws[i][1] << ','
            << chain.draws[i][2] << ',' << int(chain.accept_flags[i][0]) << ','
            << int(chain.accept_flags[i][1]) << ',' << int(chain.accept_flags[i][2]) << '\n';
    }
}

Chain load_chain_csv(std::istream& in, Family family, int support_sign,
                     std::optional<std::size_t> burn_in) {
    check_bayes_family(family);
    Chain chain;
    chain.family = family;
    chain.support_sign = support_sign;

    std::string line;
    if (!std::getline(in, line) || line.rfind("iter,mu,eta,xi", 0) != 0)
        throw std::runtime_error("load_chain_csv: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::array<double, 7> cols{};
        for (std::size_t c = 0; c < 7; ++c) {
            if (!std::getline(row, cell, ','))
                throw std::runtime_error("load_chain_csv: short row: " + line);
            cols[c] = std::stod(cell);
        }
        chain.draws.push_back({cols[1], cols[2], cols[3]});
        std::array<std::uint8_t, 3> flags{static_cast<std::uint8_t>(cols[4] != 0.0),
                                          static_cast<std::uint8_t>(cols[5] != 0.0),
                                          static_cast<std::uint8_t>(cols[6] != 0.0)};
        chain.accept_flags.push_back(flags);
        for (std::size_t k = 0; k < 3; ++k) chain.acceptance_counts[k] += flags[k];
    }
    if (chain.draws.empty()) throw std::runtime_error("load_chain_csv: no draws");
    chain.burn_in = burn_in.value_or(chain.size() / 2);
    if (chain.burn_in >= chain.size())
        throw std::invalid_argument("load_chain_csv: burn_in must be smaller than chain length");
    return chain;
}

}  // namespace pgev

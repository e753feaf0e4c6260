#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pgev/dataset.hpp"
#include "pgev/dist.hpp"

namespace pgev {

// Variances of the independent zero-mean normal priors on (mu, eta, xi),
// eta = log sigma. The defaults are wide enough to be practically flat.
struct PriorSpec {
    double v_mu = 1e4;
    double v_eta = 1e4;
    double v_xi = 1e4;
};

// Random-walk proposal variances, one per coordinate.
struct ProposalSpec {
    double w_mu = 0.01;
    double w_eta = 0.01;
    double w_xi = 0.01;
};

using Theta = std::array<double, 3>;

struct Chain {
    std::vector<Theta> draws;                        // (mu, eta, xi) per iteration
    std::vector<std::array<std::uint8_t, 3>> accept_flags;
    std::array<long, 3> acceptance_counts{0, 0, 0};
    std::size_t burn_in = 0;
    std::uint64_t seed = 0;
    Family family = Family::Pgev;
    int support_sign = +1;

    std::size_t size() const { return draws.size(); }
};

// Log posterior density of theta = (mu, eta, xi) up to a constant: the
// log-likelihood at (mu, e^eta, xi) plus the log normal priors. An empty
// dataset is the prior-only mode; out-of-support theta gives -infinity.
double log_posterior(const Theta& theta, const Dataset& data, const PriorSpec& prior,
                     Family family = Family::Pgev, int support_sign = +1);

// min{1, exp(proposed - current)} for a symmetric proposal. Both sides at
// -infinity means the chain was started out of the support: an error.
double acceptance_prob(double current, double proposed);

// Coordinate-at-a-time random-walk Metropolis in the fixed order mu, eta, xi,
// each update seeing the freshest other coordinates. Deterministic per seed.
// burn_in defaults to n_iter/2.
Chain run_mcmc_target(const std::function<double(const Theta&)>& log_target,
                      const ProposalSpec& proposal, long n_iter, const Theta& init,
                      std::uint64_t seed,
                      std::optional<std::size_t> burn_in = std::nullopt);

// The same sampler against log_posterior for a dataset. family must be the
// power family or the linear one with a free shape; the fixed-shape family
// has no xi coordinate to sample.
Chain run_mcmc(const Dataset& data, const PriorSpec& prior, const ProposalSpec& proposal,
               long n_iter, const Theta& init, std::uint64_t seed,
               Family family = Family::Pgev, int support_sign = +1,
               std::optional<std::size_t> burn_in = std::nullopt);

// Pilot-phase proposal tuning: short chains, scaling each step until the
// per-coordinate acceptance rate lands in [0.2, 0.5].
ProposalSpec tune_proposal(const Dataset& data, const PriorSpec& prior, const Theta& init,
                           std::uint64_t seed, Family family = Family::Pgev,
                           int support_sign = +1);

// Posterior predictive cdf at y: the average of the model cdf over the
// retained draws.
double predictive_cdf(const Chain& chain, double y);

// Level x solving predictive_cdf(x) = 1 - 1/m, by bracketing the per-draw
// quantiles and bisecting to 1e-8 relative width.
double return_level(const Chain& chain, double m);

struct ParamSummary {
    double mean = 0.0;
    double sd = 0.0;
    double acceptance_rate = 0.0;
};

// Post burn-in summaries on the (mu, sigma, xi) scale; sigma entries are
// computed from the exponentiated eta draws.
std::array<ParamSummary, 3> chain_summary(const Chain& chain);

// CSV with header iter,mu,eta,xi,accepted_mu,accepted_eta,accepted_xi.
void export_chain_csv(const Chain& chain, std::ostream& out);
Chain load_chain_csv(std::istream& in, Family family, int support_sign,
                     std::optional<std::size_t> burn_in = std::nullopt);

}  // namespace pgev

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgevcli/commands.hpp"

namespace {

using pgevcli::RunConfig;

void add_output_option(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--output", config.output_dir, "Directory for result files")
        ->capture_default_str();
}

void add_input_option(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--input", config.input_path, "Input CSV (label,value or value rows)")
        ->required();
}

void add_fit_family_option(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--family", config.family, "Model family")
        ->check(CLI::IsMember({"pgev", "gev", "gumbel"}))
        ->capture_default_str();
}

void add_any_family_options(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--family", config.family, "Distribution family")
        ->check(CLI::IsMember({"pgev", "gev", "gumbel", "log-frechet", "log-weibull",
                               "std-frechet", "neg-log-frechet", "neg-log-weibull",
                               "neg-exponential"}))
        ->capture_default_str();
    cmd->add_option("--mu", config.mu, "Location parameter")->capture_default_str();
    cmd->add_option("--sigma", config.sigma, "Scale parameter")->capture_default_str();
    cmd->add_option("--xi", config.xi, "Shape parameter")->capture_default_str();
    cmd->add_option("--alpha", config.alpha, "Index of the alpha-indexed stable laws")
        ->capture_default_str();
    cmd->add_option("--sign", config.support_sign, "Support branch of the power family (+1/-1)")
        ->check(CLI::IsMember({-1, 1}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power-normalized extreme value toolkit"};
    app.require_subcommand(1);
    RunConfig config;

    auto* fit = app.add_subcommand("fit", "Maximum likelihood fit with standard errors");
    add_input_option(fit, config);
    add_output_option(fit, config);
    add_fit_family_option(fit, config);
    fit->add_option("--p", config.p_list,
                    "Exceedance probabilities for delta-method quantile intervals")
        ->delimiter(',');
    fit->add_option("--level", config.level, "Confidence level for those intervals")
        ->capture_default_str();
    fit->add_flag("--plot", config.plot, "Emit SVG plots");

    auto* bayes = app.add_subcommand("bayes", "Random-walk Metropolis within Gibbs posterior");
    add_input_option(bayes, config);
    add_output_option(bayes, config);
    add_fit_family_option(bayes, config);
    bayes->add_option("--seed", config.seed, "RNG seed (required: no silent entropy)")
        ->required();
    bayes->add_option("--iters", config.n_iter, "MCMC iterations")->capture_default_str();
    bayes->add_option("--burn-in", config.burn_in, "Iterations to discard (default: half)");
    bayes->add_option("--prior-var", config.prior_var, "Variance of the normal priors")
        ->capture_default_str();
    bayes->add_option("--proposal-sd", config.proposal_sd,
                      "Proposal sds mu,eta,xi (default: pilot-tuned)")
        ->delimiter(',');
    bayes->add_option("--periods", config.periods, "Return periods (default 4,10,15,20,30,35,50)")
        ->delimiter(',');
    bayes->add_flag("--plot", config.plot, "Emit SVG plots");

    auto* gof = app.add_subcommand("gof", "Goodness of fit after the normality reduction");
    add_input_option(gof, config);
    add_output_option(gof, config);
    add_fit_family_option(gof, config);
    gof->add_option("--w2-critical", config.w2_critical,
                    "Critical value compared against the modified Cramer-von Mises statistic");
    gof->add_option("--a2-critical", config.a2_critical,
                    "Critical value compared against the modified Anderson-Darling statistic");

    auto* simulate = app.add_subcommand("simulate", "Seeded sampling by inversion");
    add_output_option(simulate, config);
    add_any_family_options(simulate, config);
    simulate->add_option("--n", config.n_samples, "Number of draws")->required();
    simulate->add_option("--seed", config.seed, "RNG seed (required: no silent entropy)")
        ->required();
    simulate->add_flag("--plot", config.plot, "Emit SVG plots");

    auto* rl = app.add_subcommand("return-levels", "Predictive return levels from a chain CSV");
    add_input_option(rl, config);
    add_output_option(rl, config);
    add_fit_family_option(rl, config);
    rl->add_option("--sign", config.support_sign, "Support branch of the power family (+1/-1)")
        ->check(CLI::IsMember({-1, 1}))
        ->capture_default_str();
    rl->add_option("--burn-in", config.burn_in, "Draws to discard (default: half)");
    rl->add_option("--periods", config.periods, "Return periods (default 4,10,15,20,30,35,50)")
        ->delimiter(',');
    rl->add_flag("--plot", config.plot, "Emit SVG plots");

    auto* query = app.add_subcommand("query", "Distribution facts: cdf, density, levels, moments");
    add_output_option(query, config);
    add_any_family_options(query, config);
    query->add_option("--x", config.x_list, "Points for cdf/density evaluation")->delimiter(',');
    query->add_option("--p", config.p_list, "Exceedance probabilities for level lookup")
        ->delimiter(',');

    auto* doa = app.add_subcommand("doa-check", "Domain-of-attraction convergence harness");
    add_output_option(doa, config);

    CLI11_PARSE(app, argc, argv);

    for (auto* cmd : {fit, bayes, gof, simulate, rl, query, doa}) {
        if (app.got_subcommand(cmd)) {
            config.command = cmd->get_name();
            break;
        }
    }

    try {
        return pgevcli::run_command(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

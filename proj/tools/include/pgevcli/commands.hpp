#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pgevcli {

// Everything a subcommand needs, bound by the argument parser. Numeric
// members hold their defaults; optionals distinguish "not given".
struct RunConfig {
    std::string command;
    std::string input_path;
    std::string output_dir = ".";
    std::string family = "pgev";

    std::uint64_t seed = 0;

    long n_iter = 10000;
    std::optional<long> burn_in;
    double prior_var = 1e4;
    std::vector<double> proposal_sd;  // 3 values; empty = pilot-tune

    std::vector<double> periods;  // empty = {4,10,15,20,30,35,50}
    std::vector<double> p_list;   // exceedance probabilities
    std::vector<double> x_list;   // evaluation points for query
    double level = 0.95;          // confidence level for interval output

    // distribution parameters for simulate / query
    double mu = 0.0;
    double sigma = 1.0;
    double xi = 0.0;
    double alpha = 1.0;
    int support_sign = +1;
    long n_samples = 100;

    std::optional<double> w2_critical;  // against the modified Cramer-von Mises
    std::optional<double> a2_critical;  // against the modified Anderson-Darling

    bool plot = false;
};

int run_command(const RunConfig& config);

int cmd_fit(const RunConfig& config);
int cmd_bayes(const RunConfig& config);
int cmd_gof(const RunConfig& config);
int cmd_simulate(const RunConfig& config);
int cmd_return_levels(const RunConfig& config);
int cmd_query(const RunConfig& config);
int cmd_doa_check(const RunConfig& config);

}  // namespace pgevcli

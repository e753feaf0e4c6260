#include "pgevcli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <stdexcept>

#include "pgev/asymptotics.hpp"
#include "pgev/bayes.hpp"
#include "pgev/dist.hpp"
#include "pgev/gof.hpp"
#include "pgev/mle.hpp"
#include "pgevcli/csv_io.hpp"
#include "pgevcli/report.hpp"
#include "pgevcli/svg.hpp"

namespace pgevcli {
namespace fs = std::filesystem;

namespace {

constexpr double kDefaultPeriods[] = {4, 10, 15, 20, 30, 35, 50};

fs::path prepare_output_dir(const RunConfig& config) {
    fs::path dir = config.output_dir.empty() ? fs::path(".") : fs::path(config.output_dir);
    fs::create_directories(dir);
    return dir;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void note_written(const fs::path& path) { std::cout << "wrote " << path.string() << "\n"; }

pgev::Family fit_family(const std::string& name) {
    const auto family = family_from_string(name);
    if (family != pgev::Family::Pgev && family != pgev::Family::Gev &&
        family != pgev::Family::Gumbel)
        throw std::invalid_argument("family must be pgev, gev or gumbel for this command");
    return family;
}

pgev::ModelParams params_from_config(const RunConfig& config) {
    const auto family = family_from_string(config.family);
    switch (family) {
        case pgev::Family::Pgev:
            return pgev::ModelParams::pgev(config.mu, config.sigma, config.xi,
                                           config.support_sign);
        case pgev::Family::Gev:
            return pgev::ModelParams::gev(config.mu, config.sigma, config.xi);
        case pgev::Family::Gumbel:
            return pgev::ModelParams::gumbel(config.mu, config.sigma);
        default:
            return pgev::ModelParams::pmax(family, config.alpha);
    }
}

std::vector<double> period_grid(const RunConfig& config) {
    if (config.periods.empty()) return {std::begin(kDefaultPeriods), std::end(kDefaultPeriods)};
    for (double m : config.periods)
        if (!(m > 1.0)) throw std::invalid_argument("return periods must exceed 1");
    return config.periods;
}

std::optional<std::size_t> burn_in_option(const RunConfig& config) {
    if (!config.burn_in) return std::nullopt;
    if (*config.burn_in < 0) throw std::invalid_argument("--burn-in must be nonnegative");
    return static_cast<std::size_t>(*config.burn_in);
}

// x axis for the data plot: the labels when they are all numeric (years),
// otherwise 1..n.
std::vector<double> series_x(const pgev::Dataset& data) {
    std::vector<double> x(data.size());
    if (data.labels.size() == data.size() && !data.labels.empty()) {
        bool numeric = true;
        for (std::size_t i = 0; i < data.size() && numeric; ++i) {
            char* end = nullptr;
            x[i] = std::strtod(data.labels[i].c_str(), &end);
            numeric = end == data.labels[i].c_str() + data.labels[i].size() &&
                      !data.labels[i].empty();
        }
        if (numeric) return x;
    }
    for (std::size_t i = 0; i < data.size(); ++i) x[i] = static_cast<double>(i + 1);
    return x;
}

void plot_data_series(const pgev::Dataset& data, const fs::path& path) {
    Series line;
    line.kind = SeriesKind::Line;
    line.color = "#9ab";
    line.x = series_x(data);
    line.y = data.values;
    Series points = line;
    points.kind = SeriesKind::Points;
    points.color = "#1f6feb";
    Panel panel{"observed series", "index", "value", {line, points}};
    auto out = open_output(path);
    write_svg({panel}, out);
    note_written(path);
}

void plot_density_overlay(const pgev::Dataset& data, const pgev::ModelParams& params,
                          const fs::path& path) {
    const auto [mn_it, mx_it] = std::minmax_element(data.values.begin(), data.values.end());
    const double lo = *mn_it, hi = *mx_it;
    const std::size_t n = data.size();
    const int bins = std::max(6, 1 + static_cast<int>(std::ceil(std::log2(double(n)))));
    const double width = (hi - lo) / bins > 0 ? (hi - lo) / bins : 1.0;

    Series hist;
    hist.label = "data";
    hist.kind = SeriesKind::Bars;
    hist.color = "#7f9fd0";
    for (int b = 0; b < bins; ++b) {
        const double left = lo + b * width;
        long count = 0;
        for (double v : data.values)
            if (v >= left && (v < left + width || (b == bins - 1 && v <= hi))) ++count;
        hist.x.push_back(left + width / 2);
        hist.y.push_back(double(count) / (double(n) * width));
    }

    const auto sup = pgev::support(params);
    double curve_lo = std::max(lo - 0.1 * (hi - lo), std::nextafter(sup.lower, sup.upper));
    double curve_hi = std::min(hi + 0.1 * (hi - lo), std::nextafter(sup.upper, sup.lower));
    Series curve;
    curve.label = "fitted density";
    curve.kind = SeriesKind::Line;
    curve.color = "#c23b22";
    for (int i = 0; i <= 240; ++i) {
        const double x = curve_lo + (curve_hi - curve_lo) * i / 240.0;
        curve.x.push_back(x);
        curve.y.push_back(pgev::pdf(params, x));
    }

    Panel panel{"histogram and fitted density", "value", "density", {hist, curve}};
    auto out = open_output(path);
    write_svg({panel}, out);
    note_written(path);
}

void plot_traces(const pgev::Chain& chain, const fs::path& path) {
    std::vector<double> iter(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) iter[i] = double(i);
    const char* names[] = {"mu", "eta = log sigma", "xi"};
    std::vector<Panel> panels;
    for (int k = 0; k < 3; ++k) {
        Series trace;
        trace.kind = SeriesKind::Line;
        trace.color = "#1f6feb";
        trace.x = iter;
        trace.y.resize(chain.size());
        for (std::size_t i = 0; i < chain.size(); ++i) trace.y[i] = chain.draws[i][k];
        panels.push_back({std::string("trace of ") + names[k], "iteration", names[k], {trace}});
    }
    auto out = open_output(path);
    write_svg(panels, out, 760, 220);
    note_written(path);
}

void plot_return_curve(const pgev::Chain& chain, const std::vector<double>& periods,
                       const std::vector<double>& levels, const fs::path& path) {
    Series points;
    points.label = "table periods";
    points.kind = SeriesKind::Points;
    points.color = "#c23b22";
    points.x = periods;
    points.y = levels;

    Series curve;
    curve.label = "predictive level";
    curve.kind = SeriesKind::Line;
    curve.color = "#1f6feb";
    const double m_lo = *std::min_element(periods.begin(), periods.end());
    const double m_hi = *std::max_element(periods.begin(), periods.end());
    if (m_hi > m_lo) {
        const double l0 = std::log(m_lo), l1 = std::log(m_hi);
        for (int i = 0; i <= 40; ++i) {
            const double m = std::exp(l0 + (l1 - l0) * i / 40.0);
            curve.x.push_back(m);
            curve.y.push_back(pgev::return_level(chain, m));
        }
    }

    Panel panel{"predictive return levels", "return period m", "level", {curve, points}};
    auto out = open_output(path);
    write_svg({panel}, out);
    note_written(path);
}

std::vector<double> levels_for(const pgev::Chain& chain, const std::vector<double>& periods) {
    std::vector<double> levels;
    levels.reserve(periods.size());
    for (double m : periods) levels.push_back(pgev::return_level(chain, m));
    return levels;
}

nlohmann::json support_bound(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : "-inf";
}

std::string doa_case_name(pgev::DoaCase c) {
    switch (c) {
        case pgev::DoaCase::L1PosXi: return "L1PosXi";
        case pgev::DoaCase::L1NegXi: return "L1NegXi";
        case pgev::DoaCase::L2PosXi: return "L2PosXi";
        case pgev::DoaCase::L2NegXi: return "L2NegXi";
    }
    return "unknown";
}

}  // namespace

int cmd_fit(const RunConfig& config) {
    const auto dir = prepare_output_dir(config);
    auto ingest = ingest_csv(config.input_path);
    const auto family = fit_family(config.family);
    const auto fit = pgev::fit_mle(ingest.data, family);

    auto j = fit_report_json(fit);
    for (const auto& w : ingest.warnings) j["warnings"].push_back("input: " + w);
    j["n"] = ingest.data.size();
    if (!config.p_list.empty()) {
        auto quantiles = nlohmann::json::array();
        for (double p : config.p_list) {
            nlohmann::json q;
            q["p"] = p;
            q["level"] = config.level;
            try {
                const auto ci = pgev::quantile_ci(fit, p, config.level);
                q["estimate"] = ci.estimate;
                q["lower"] = ci.lower;
                q["upper"] = ci.upper;
                q["variance"] = ci.variance;
            } catch (const std::exception& e) {
                q["error"] = e.what();
            }
            quantiles.push_back(q);
        }
        j["quantiles"] = quantiles;
    }

    auto out = open_output(dir / "fit_report.json");
    write_json(j, out);
    note_written(dir / "fit_report.json");

    if (config.plot) {
        plot_data_series(ingest.data, dir / "data_series.svg");
        plot_density_overlay(ingest.data, fit.params, dir / "density_overlay.svg");
    }
    return 0;
}

int cmd_bayes(const RunConfig& config) {
    const auto dir = prepare_output_dir(config);
    auto ingest = ingest_csv(config.input_path);
    const auto family = fit_family(config.family);
    if (family == pgev::Family::Gumbel)
        throw std::invalid_argument("bayes needs a family with a shape coordinate: pgev or gev");

    pgev::FitOptions fit_options;
    fit_options.compute_information = false;
    const auto fit = pgev::fit_mle(ingest.data, family, std::nullopt, fit_options);
    const pgev::Theta init{fit.params.mu, std::log(fit.params.sigma), fit.params.xi()};
    const int sign = fit.params.support_sign;

    const pgev::PriorSpec prior{config.prior_var, config.prior_var, config.prior_var};
    pgev::ProposalSpec proposal;
    if (!config.proposal_sd.empty()) {
        if (config.proposal_sd.size() != 3)
            throw std::invalid_argument("--proposal-sd needs three values: mu,eta,xi");
        for (double sd : config.proposal_sd)
            if (!(sd > 0.0)) throw std::invalid_argument("proposal sds must be positive");
        proposal = {config.proposal_sd[0] * config.proposal_sd[0],
                    config.proposal_sd[1] * config.proposal_sd[1],
                    config.proposal_sd[2] * config.proposal_sd[2]};
    } else {
        proposal = pgev::tune_proposal(ingest.data, prior, init, config.seed, family, sign);
    }

    const auto chain = pgev::run_mcmc(ingest.data, prior, proposal, config.n_iter, init,
                                      config.seed, family, sign, burn_in_option(config));

    {
        auto out = open_output(dir / "chain.csv");
        pgev::export_chain_csv(chain, out);
        note_written(dir / "chain.csv");
    }

    const auto summary = pgev::chain_summary(chain);
    nlohmann::json j;
    j["family"] = pgev::family_name(family);
    j["support_sign"] = chain.support_sign;
    j["mu"] = summary[0].mean;
    j["sigma"] = summary[1].mean;
    j["xi"] = summary[2].mean;
    j["se"] = {{"mu", summary[0].sd}, {"sigma", summary[1].sd}, {"xi", summary[2].sd}};
    j["acceptance_rate"] = {{"mu", summary[0].acceptance_rate},
                            {"eta", summary[1].acceptance_rate},
                            {"xi", summary[2].acceptance_rate}};
    j["iters"] = config.n_iter;
    j["burn_in"] = chain.burn_in;
    j["seed"] = config.seed;
    j["prior_var"] = config.prior_var;
    j["proposal_sd"] = {{"mu", std::sqrt(proposal.w_mu)},
                        {"eta", std::sqrt(proposal.w_eta)},
                        {"xi", std::sqrt(proposal.w_xi)}};
    j["warnings"] = fit.warnings;
    for (const auto& w : ingest.warnings) j["warnings"].push_back("input: " + w);
    {
        auto out = open_output(dir / "bayes_summary.json");
        write_json(j, out);
        note_written(dir / "bayes_summary.json");
    }

    const auto periods = period_grid(config);
    const auto levels = levels_for(chain, periods);
    {
        auto out = open_output(dir / "return_levels.csv");
        write_return_levels_csv(periods, levels, out);
        note_written(dir / "return_levels.csv");
    }

    if (config.plot) {
        plot_traces(chain, dir / "traces.svg");
        plot_return_curve(chain, periods, levels, dir / "return_curve.svg");
    }
    return 0;
}

int cmd_gof(const RunConfig& config) {
    const auto dir = prepare_output_dir(config);
    auto ingest = ingest_csv(config.input_path);
    const auto family = fit_family(config.family);
    const auto fit = pgev::fit_mle(ingest.data, family);
    const auto report = pgev::gof_test(ingest.data, fit.params);

    auto j = params_to_json(fit.params);
    j["loglik"] = fit.loglik;
    j["gof"] = {{"w2", report.w2},
                {"a2", report.a2},
                {"c_modified", report.c_modified},
                {"a_modified", report.a_modified},
                {"n", report.n}};
    if (config.w2_critical) {
        j["w2_critical"] = *config.w2_critical;
        j["w2_reject"] = report.c_modified > *config.w2_critical;
    }
    if (config.a2_critical) {
        j["a2_critical"] = *config.a2_critical;
        j["a2_reject"] = report.a_modified > *config.a2_critical;
    }
    j["warnings"] = fit.warnings;
    for (const auto& w : ingest.warnings) j["warnings"].push_back("input: " + w);

    auto out = open_output(dir / "gof_report.json");
    write_json(j, out);
    note_written(dir / "gof_report.json");
    return 0;
}

int cmd_simulate(const RunConfig& config) {
    const auto dir = prepare_output_dir(config);
    if (config.n_samples < 1) throw std::invalid_argument("--n must be at least 1");
    const auto params = params_from_config(config);
    const auto data = pgev::sample(params, static_cast<std::size_t>(config.n_samples),
                                   config.seed);
    {
        auto out = open_output(dir / "samples.csv");
        write_values_csv(data, out);
        note_written(dir / "samples.csv");
    }
    if (config.plot) plot_data_series(data, dir / "data_series.svg");
    return 0;
}

int cmd_return_levels(const RunConfig& config) {
    const auto dir = prepare_output_dir(config);
    const auto family = fit_family(config.family);
    if (family == pgev::Family::Gumbel)
        throw std::invalid_argument("chains carry a shape coordinate: family must be pgev or gev");
    std::ifstream in(config.input_path);
    if (!in) throw std::runtime_error("cannot open input file: " + config.input_path);
    const auto chain =
        pgev::load_chain_csv(in, family, config.support_sign, burn_in_option(config));

    const auto periods = period_grid(config);
    const auto levels = levels_for(chain, periods);
    {
        auto out = open_output(dir / "return_levels.csv");
        write_return_levels_csv(periods, levels, out);
        note_written(dir / "return_levels.csv");
    }
    if (config.plot) plot_return_curve(chain, periods, levels, dir / "return_curve.svg");
    return 0;
}

int cmd_query(const RunConfig& config) {
    const auto dir = prepare_output_dir(config);
    const auto params = params_from_config(config);

    auto j = params_to_json(params);
    auto warnings = nlohmann::json::array();
    const auto sup = pgev::support(params);
    j["support"] = {{"lower", support_bound(sup.lower)}, {"upper", support_bound(sup.upper)}};

    try {
        j["mean"] = (params.support_sign < 0 && params.family == pgev::Family::Pgev ? -1.0 : 1.0) *
                    pgev::moment(params, 1);
        j["variance"] = pgev::variance(params);
    } catch (const pgev::MomentUndefinedError& e) {
        j["mean"] = nullptr;
        j["variance"] = nullptr;
        warnings.push_back(e.what());
    }
    try {
        j["entropy"] = pgev::entropy(params);
    } catch (const std::exception& e) {
        j["entropy"] = nullptr;
        warnings.push_back(e.what());
    }

    if (!config.x_list.empty()) {
        auto points = nlohmann::json::array();
        for (double x : config.x_list)
            points.push_back(
                {{"x", x}, {"cdf", pgev::cdf(params, x)}, {"pdf", pgev::pdf(params, x)}});
        j["points"] = points;
    }
    if (!config.p_list.empty()) {
        auto levels = nlohmann::json::array();
        for (double p : config.p_list) {
            if (!(p > 0.0) || !(p < 1.0))
                throw std::invalid_argument("--p entries must lie strictly in (0,1)");
            levels.push_back({{"p", p}, {"level", pgev::quantile(params, 1.0 - p)}});
        }
        j["levels"] = levels;
    }
    j["warnings"] = warnings;

    write_json(j, std::cout);
    auto out = open_output(dir / "query_report.json");
    write_json(j, out);
    note_written(dir / "query_report.json");
    return 0;
}

int cmd_doa_check(const RunConfig& config) {
    const auto dir = prepare_output_dir(config);

    struct Combo {
        pgev::DoaCase doa_case;
        pgev::ParentDistribution parent;
        double xi;
        std::vector<double> xs;
    };
    const std::vector<Combo> combos = {
        {pgev::DoaCase::L1PosXi, pgev::log_tail_parent(2.0), 0.5, {1.5, 3.0}},
        {pgev::DoaCase::L1NegXi, pgev::k2_tail_parent(2.0), -0.5, {0.5, 2.0}},
        {pgev::DoaCase::L1NegXi, pgev::uniform_parent(0.0, 1.0), -1.0, {0.5, 1.5}},
        {pgev::DoaCase::L2PosXi, pgev::k4_tail_parent(2.0), 0.5, {-0.5, -2.0}},
        {pgev::DoaCase::L2PosXi, pgev::inv_log_neg_parent(), 1.0, {-0.5}},
        {pgev::DoaCase::L2NegXi, pgev::k5_tail_parent(2.0), -0.5, {-2.0, -1.2}},
        {pgev::DoaCase::L2NegXi, pgev::log_ratio_neg_parent(), -1.0, {-2.0}},
    };

    nlohmann::json summary;
    auto doa_rows = nlohmann::json::array();
    {
        auto out = open_output(dir / "doa_report.csv");
        out << "case,parent,xi,x,t,ratio,self_consistent_limit,stated_limit,abs_gap\n"
            << std::setprecision(17);
        for (const auto& combo : combos) {
            for (double x : combo.xs) {
                const auto trace = pgev::doa_trace(combo.doa_case, combo.parent, combo.xi, x);
                for (std::size_t i = 0; i < trace.t_values.size(); ++i) {
                    out << doa_case_name(combo.doa_case) << "," << combo.parent.name << ","
                        << combo.xi << "," << x << "," << trace.t_values[i] << ","
                        << trace.ratio_values[i] << "," << trace.self_consistent_limit << ","
                        << trace.stated_limit << ","
                        << std::abs(trace.ratio_values[i] - trace.self_consistent_limit) << "\n";
                }
                const double final_gap =
                    std::abs(trace.ratio_values.back() - trace.self_consistent_limit);
                doa_rows.push_back({{"case", doa_case_name(combo.doa_case)},
                                    {"parent", combo.parent.name},
                                    {"xi", combo.xi},
                                    {"x", x},
                                    {"final_gap", final_gap},
                                    {"max_tail_gap", trace.max_abs_gap}});
                std::cout << doa_case_name(combo.doa_case) << " " << combo.parent.name
                          << " xi=" << combo.xi << " x=" << x << ": final gap " << final_gap
                          << "\n";
            }
        }
        note_written(dir / "doa_report.csv");
    }

    struct VmCombo {
        int vm_case;
        pgev::ParentDistribution parent;
        double alpha;
        std::vector<double> ts;
    };
    const double a = 1.7;
    const std::vector<VmCombo> vm_combos = {
        {1, pgev::log_tail_parent(a), a, {1e2, 1e3, 1e4, 1e5, 1e6}},
        {2, pgev::k2_tail_parent(a), a, {1 - 1e-2, 1 - 1e-3, 1 - 1e-4, 1 - 1e-5, 1 - 1e-6}},
        {3, pgev::pareto_parent(), 1.0, {1e2, 1e3, 1e4, 1e5, 1e6}},
        {4, pgev::k4_tail_parent(a), a, {-1e-2, -1e-3, -1e-4, -1e-5, -1e-6}},
        {5, pgev::k5_tail_parent(a), a, {-1 - 1e-2, -1 - 1e-3, -1 - 1e-4, -1 - 1e-5, -1 - 1e-6}},
        {6, pgev::uniform_parent(-1.0, 0.0), 1.0, {-1e-2, -1e-3, -1e-4, -1e-5, -1e-6}},
    };

    auto vm_rows = nlohmann::json::array();
    {
        auto out = open_output(dir / "von_mises_report.csv");
        out << "case,parent,alpha,t,ratio,target,abs_gap\n" << std::setprecision(17);
        for (const auto& combo : vm_combos) {
            const auto trace =
                pgev::von_mises_check(combo.vm_case, combo.parent, combo.alpha, combo.ts);
            for (std::size_t i = 0; i < trace.t_values.size(); ++i) {
                out << combo.vm_case << "," << combo.parent.name << "," << combo.alpha << ","
                    << trace.t_values[i] << "," << trace.ratio_values[i] << ","
                    << trace.self_consistent_limit << ","
                    << std::abs(trace.ratio_values[i] - trace.self_consistent_limit) << "\n";
            }
            const double final_gap =
                std::abs(trace.ratio_values.back() - trace.self_consistent_limit);
            vm_rows.push_back({{"case", combo.vm_case},
                               {"parent", combo.parent.name},
                               {"alpha", combo.alpha},
                               {"final_gap", final_gap}});
            std::cout << "von Mises " << combo.vm_case << " " << combo.parent.name
                      << ": final gap " << final_gap << "\n";
        }
        note_written(dir / "von_mises_report.csv");
    }

    summary["doa"] = doa_rows;
    summary["von_mises"] = vm_rows;
    auto out = open_output(dir / "doa_summary.json");
    write_json(summary, out);
    note_written(dir / "doa_summary.json");
    return 0;
}

int run_command(const RunConfig& config) {
    if (config.command == "fit") return cmd_fit(config);
    if (config.command == "bayes") return cmd_bayes(config);
    if (config.command == "gof") return cmd_gof(config);
    if (config.command == "simulate") return cmd_simulate(config);
    if (config.command == "return-levels") return cmd_return_levels(config);
    if (config.command == "query") return cmd_query(config);
    if (config.command == "doa-check") return cmd_doa_check(config);
    throw std::invalid_argument("unknown command: " + config.command);
}

}  // namespace pgevcli

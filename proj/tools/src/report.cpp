#include "pgevcli/report.hpp"

#include <ostream>
#include <stdexcept>

namespace pgevcli {

pgev::Family family_from_string(const std::string& name) {
    using pgev::Family;
    for (Family f : {Family::Pgev, Family::Gev, Family::Gumbel, Family::LogFrechet,
                     Family::LogWeibull, Family::StdFrechet, Family::NegLogFrechet,
                     Family::NegLogWeibull, Family::NegExponential}) {
        if (pgev::family_name(f) == name) return f;
    }
    throw std::invalid_argument("unknown family: " + name);
}

nlohmann::json params_to_json(const pgev::ModelParams& params) {
    nlohmann::json j;
    j["family"] = pgev::family_name(params.family);
    j["mu"] = params.mu;
    j["sigma"] = params.sigma;
    const bool alpha_family = params.family != pgev::Family::Pgev &&
                              params.family != pgev::Family::Gev &&
                              params.family != pgev::Family::Gumbel;
    if (alpha_family)
        j["alpha"] = params.alpha();
    else
        j["xi"] = params.family == pgev::Family::Gumbel ? 0.0 : params.xi();
    j["support_sign"] = params.support_sign;
    return j;
}

pgev::ModelParams params_from_json(const nlohmann::json& j) {
    const auto family = family_from_string(j.at("family").get<std::string>());
    switch (family) {
        case pgev::Family::Pgev:
            return pgev::ModelParams::pgev(j.at("mu").get<double>(), j.at("sigma").get<double>(),
                                           j.at("xi").get<double>(),
                                           j.at("support_sign").get<int>());
        case pgev::Family::Gev:
            return pgev::ModelParams::gev(j.at("mu").get<double>(), j.at("sigma").get<double>(),
                                          j.at("xi").get<double>());
        case pgev::Family::Gumbel:
            return pgev::ModelParams::gumbel(j.at("mu").get<double>(),
                                             j.at("sigma").get<double>());
        default:
            return pgev::ModelParams::pmax(family, j.value("alpha", 1.0));
    }
}

nlohmann::json fit_report_json(const pgev::FitResult& fit) {
    nlohmann::json j = params_to_json(fit.params);
    j["loglik"] = fit.loglik;
    if (fit.std_errors.empty()) {
        j["se"] = nullptr;
    } else {
        nlohmann::json se;
        const char* names[] = {"mu", "sigma", "xi"};
        for (std::size_t i = 0; i < fit.std_errors.size() && i < 3; ++i)
            se[names[i]] = fit.std_errors[i];
        j["se"] = se;
    }
    j["converged"] = fit.converged;
    j["iterations"] = fit.iterations;
    j["warnings"] = fit.warnings;
    return j;
}

void write_json(const nlohmann::json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

}  // namespace pgevcli

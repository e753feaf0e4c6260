#pragma once

#include <string>

#include "json.hpp"
#include "pgev/dist.hpp"
#include "pgev/mle.hpp"

namespace pgevcli {

// Inverse of pgev::family_name; throws on an unknown name.
pgev::Family family_from_string(const std::string& name);

// Parameter block with keys family, mu, sigma, xi (or alpha), support_sign.
nlohmann::json params_to_json(const pgev::ModelParams& params);

// Rebuilds ModelParams from a parameter block or a full fit report. Doubles
// round-trip exactly through the JSON layer.
pgev::ModelParams params_from_json(const nlohmann::json& j);

// Full fit report: parameter block plus loglik, se (per-parameter map),
// converged, iterations, warnings.
nlohmann::json fit_report_json(const pgev::FitResult& fit);

// dump(2) with a trailing newline; the single serialization used everywhere
// so identical configs give identical bytes.
void write_json(const nlohmann::json& j, std::ostream& out);

}  // namespace pgevcli

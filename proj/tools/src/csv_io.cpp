#include "pgevcli/csv_io.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace pgevcli {
namespace {

std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

}  // namespace

IngestResult ingest_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);

    IngestResult result;
    std::string line;
    long row = 0;
    bool seen_row = false;
    while (std::getline(in, line)) {
        ++row;
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            result.warnings.push_back("row " + std::to_string(row) + ": blank line skipped");
            continue;
        }
        const auto fields = split_fields(stripped);
        if (fields.size() > 2)
            throw std::runtime_error("row " + std::to_string(row) +
                                     ": expected `label,value` or `value`, got " +
                                     std::to_string(fields.size()) + " fields");
        double value = 0.0;
        if (!parse_double(fields.back(), value)) {
            if (!seen_row) {  // header line
                seen_row = true;
                continue;
            }
            throw std::runtime_error("row " + std::to_string(row) + ": non-numeric value '" +
                                     fields.back() + "'");
        }
        seen_row = true;
        if (fields.size() == 2) result.data.labels.push_back(fields.front());
        result.data.values.push_back(value);
    }
    if (result.data.values.empty()) throw std::runtime_error("no data rows in " + path);
    if (!result.data.labels.empty() && result.data.labels.size() != result.data.values.size())
        throw std::runtime_error("mixed one- and two-column rows in " + path);
    return result;
}

void write_values_csv(const pgev::Dataset& data, std::ostream& out) {
    out << "value\n" << std::setprecision(17);
    for (double v : data.values) out << v << "\n";
}

void write_return_levels_csv(const std::vector<double>& periods,
                             const std::vector<double>& levels, std::ostream& out) {
    if (periods.size() != levels.size())
        throw std::invalid_argument("write_return_levels_csv: size mismatch");
    out << "period,level\n" << std::setprecision(17);
    for (std::size_t i = 0; i < periods.size(); ++i)
        out << periods[i] << "," << levels[i] << "\n";
}

}  // namespace pgevcli

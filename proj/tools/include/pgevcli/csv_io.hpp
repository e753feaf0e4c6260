#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pgev/dataset.hpp"

namespace pgevcli {

struct IngestResult {
    pgev::Dataset data;
    std::vector<std::string> warnings;
};

// Reads `label,value` rows or a bare `value` column, with or without a header
// line. Blank lines are skipped with a warning; a non-numeric value cell is
// an error naming the row.
IngestResult ingest_csv(const std::string& path);

// One `value` column, precision 17, reproducible byte for byte.
void write_values_csv(const pgev::Dataset& data, std::ostream& out);

// `period,level` rows.
void write_return_levels_csv(const std::vector<double>& periods,
                             const std::vector<double>& levels, std::ostream& out);

}  // namespace pgevcli

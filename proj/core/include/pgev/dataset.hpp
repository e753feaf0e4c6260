#pragma once

#include <string>
#include <vector>

namespace pgev {

// A univariate sample, kept in input order. Labels are optional row tags
// (e.g. years for an annual-maximum series); when present there is one label
// per value. Operations that cannot work on an empty sample say so; an empty
// Dataset itself is legal (prior-only posterior evaluation uses one).
struct Dataset {
    std::vector<double> values;
    std::vector<std::string> labels;

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }
};

}  // namespace pgev

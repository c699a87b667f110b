#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "acaps/config.hpp"

namespace acaps {

using Record = nlohmann::ordered_json;

struct Report {
    std::string command;
    std::vector<Record> rows;
    std::vector<std::string> notes;
    bool all_pass = true;  // only meaningful for verify and bm
};

Report cmd_count(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg);
Report cmd_sweep(const RunConfig& cfg);
Report cmd_eta(const RunConfig& cfg);
Report cmd_index(const RunConfig& cfg);
Report cmd_bm(const RunConfig& cfg);

// Both writers print numbers through the same formatter, so a value reads
// identically in either format. Nested objects become dotted CSV columns,
// arrays are joined with ';'.
std::string format_number(double x);
std::string to_json(const Report& r);
std::string to_csv(const Report& r);

}  // namespace acaps

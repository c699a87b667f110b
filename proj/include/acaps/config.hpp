#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "acaps/berry_mondragon.hpp"
#include "acaps/zero_modes.hpp"

namespace acaps {

// Thrown for anything wrong with a configuration file; the CLI exits with 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what, std::vector<std::string> violations = {})
        : std::runtime_error(what), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

// A rational literal: a JSON number, or a string "p" or "p/q".
double parse_rational(const nlohmann::json& v, const std::string& where);

struct SweepRange {
    double from = -6.0;  // in units of pi
    double to = 6.0;
    double step = 0.125;
};

struct EtaParams {
    std::vector<double> c{0.125, 0.25, 1.0 / 3.0, 0.5, 0.75};
    long terms = 10000;
    std::vector<double> s_nodes{0.2, 0.1, 0.05};
};

struct BMParams {
    BMConfig cfg;
    std::optional<SweepRange> sweep;
    bool unbounded = false;
};

struct RunConfig {
    std::optional<DomainSpec> domain;
    FieldSpec field;
    Tolerances tolerances;
    GridSpec grid;
    SweepRange sweep;
    EtaParams eta;
    std::optional<BMParams> bm;
};

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

// Checks domain and field invariants; throws ConfigError listing violations.
void require_problem(const RunConfig& cfg);

}  // namespace acaps

#include "acaps/config.hpp"

#include <fstream>

#include "acaps/errors.hpp"

namespace acaps {

using nlohmann::json;

double parse_rational(const json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (!v.is_string()) throw ConfigError(where + ": expected a number or a rational string");
    std::string s = v.get<std::string>();
    auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            double x = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return x;
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        long long p = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument(s);
        long long q = std::stoll(den, &used);
        if (used != den.size() || q == 0) throw std::invalid_argument(s);
        return static_cast<double>(p) / static_cast<double>(q);
    } catch (const std::logic_error&) {
        throw ConfigError(where + ": cannot parse \"" + s + "\" as a rational");
    }
}

namespace {

Complex parse_point(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) throw ConfigError(where + ": expected [x, y]");
    return {parse_rational(v[0], where), parse_rational(v[1], where)};
}

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ConfigError(where + ": missing key \"" + key + "\"");
    return j.at(key);
}

double pi_multiple(const json& v, const std::string& where) { return kPi * parse_rational(v, where); }

DomainSpec parse_domain(const json& j) {
    std::string kind = require(j, "kind", "domain").get<std::string>();
    std::vector<Hole> holes;
    if (j.contains("holes")) {
        const auto& hs = j.at("holes");
        if (!hs.is_array()) throw ConfigError("domain.holes: expected an array");
        for (std::size_t k = 0; k < hs.size(); ++k) {
            std::string w = "domain.holes[" + std::to_string(k) + "]";
            holes.push_back({parse_point(require(hs[k], "center", w), w), parse_rational(require(hs[k], "radius", w), w)});
        }
    }
    if (kind == "plane") return DomainSpec::plane(std::move(holes));
    if (kind == "disc") return DomainSpec::disc(parse_rational(require(j, "outer_radius", "domain"), "domain"), std::move(holes));
    if (kind == "sphere") {
        const auto& o = require(j, "omitted_hole", "domain");
        if (!o.is_number_integer() || o.get<long>() < 0) throw ConfigError("domain.omitted_hole: expected an index");
        return DomainSpec::sphere(std::move(holes), o.get<std::size_t>());
    }
    throw ConfigError("domain.kind: unknown kind \"" + kind + "\"");
}

FieldSpec parse_field(const json& j) {
    FieldSpec f;
    if (j.contains("bumps")) {
        const auto& bs = j.at("bumps");
        if (!bs.is_array()) throw ConfigError("field.bumps: expected an array");
        for (std::size_t k = 0; k < bs.size(); ++k) {
            std::string w = "field.bumps[" + std::to_string(k) + "]";
            RadialBump b;
            b.center = parse_point(require(bs[k], "center", w), w);
            b.support_radius = parse_rational(require(bs[k], "radius", w), w);
            b.flux = pi_multiple(require(bs[k], "flux", w), w);
            std::string prof = bs[k].value("profile", "smooth");
            if (prof == "smooth") b.profile = Profile::SmoothCompact;
            else if (prof == "uniform") b.profile = Profile::UniformDisc;
            else throw ConfigError(w + ".profile: unknown profile \"" + prof + "\"");
            f.bumps.push_back(b);
        }
    }
    if (j.contains("hole_fluxes")) {
        const auto& hf = j.at("hole_fluxes");
        if (!hf.is_array()) throw ConfigError("field.hole_fluxes: expected an array");
        for (std::size_t k = 0; k < hf.size(); ++k) f.hole_fluxes.push_back(pi_multiple(hf[k], "field.hole_fluxes"));
    }
    if (j.contains("q")) f.q = parse_rational(j.at("q"), "field.q");
    std::string kc = j.value("kernel_choice", "default");
    if (kc == "default") f.kernel_choice = KernelChoice::Default;
    else if (kc == "alternate") f.kernel_choice = KernelChoice::Alternate;
    else throw ConfigError("field.kernel_choice: unknown choice \"" + kc + "\"");
    return f;
}

SweepRange parse_sweep(const json& j, const std::string& where) {
    SweepRange s;
    if (j.contains("from")) s.from = parse_rational(j.at("from"), where + ".from");
    if (j.contains("to")) s.to = parse_rational(j.at("to"), where + ".to");
    if (j.contains("step")) s.step = parse_rational(j.at("step"), where + ".step");
    if (!(s.step > 0.0) || !(s.to >= s.from)) throw ConfigError(where + ": need step > 0 and to >= from");
    return s;
}

}  // namespace

RunConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
    RunConfig cfg;
    try {
        if (j.contains("domain")) cfg.domain = parse_domain(j.at("domain"));
        if (j.contains("field")) cfg.field = parse_field(j.at("field"));
        if (j.contains("tolerances")) {
            const auto& t = j.at("tolerances");
            cfg.tolerances.residual = t.value("residual", cfg.tolerances.residual);
            cfg.tolerances.leakage = t.value("leakage", cfg.tolerances.leakage);
            if (!(cfg.tolerances.residual > 0.0) || !(cfg.tolerances.leakage > 0.0))
                throw ConfigError("tolerances must be positive");
        }
        if (j.contains("grid")) {
            int n = j.at("grid").value("resolution", 256);
            if (n < 8) throw ConfigError("grid.resolution must be at least 8");
            cfg.grid = GridSpec::from_resolution(n);
        }
        if (j.contains("sweep")) cfg.sweep = parse_sweep(j.at("sweep"), "sweep");
        if (j.contains("eta")) {
            const auto& e = j.at("eta");
            if (e.contains("c")) {
                cfg.eta.c.clear();
                for (const auto& c : e.at("c")) cfg.eta.c.push_back(parse_rational(c, "eta.c"));
            }
            cfg.eta.terms = e.value("terms", cfg.eta.terms);
            if (cfg.eta.terms < 8) throw ConfigError("eta.terms must be at least 8");
            if (e.contains("s_nodes")) cfg.eta.s_nodes = e.at("s_nodes").get<std::vector<double>>();
            if (cfg.eta.s_nodes.size() < 2) throw ConfigError("eta.s_nodes needs at least two nodes");
        }
        if (j.contains("bm")) {
            const auto& b = j.at("bm");
            BMParams p;
            p.cfg.r1 = parse_rational(require(b, "r1", "bm"), "bm.r1");
            p.cfg.r_out = parse_rational(require(b, "r_out", "bm"), "bm.r_out");
            p.cfg.s_in = parse_rational(require(b, "s_in", "bm"), "bm.s_in");
            p.cfg.s_out = parse_rational(require(b, "s_out", "bm"), "bm.s_out");
            p.cfg.phi = b.contains("flux") ? pi_multiple(b.at("flux"), "bm.flux") : 0.0;
            if (b.contains("sweep")) p.sweep = parse_sweep(b.at("sweep"), "bm.sweep");
            p.unbounded = b.value("unbounded", false);
            try {
                validate_bm(p.cfg);
            } catch (const Error& e) {
                throw ConfigError(std::string("bm: ") + e.what());
            }
            cfg.bm = p;
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed configuration: ") + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("cannot parse ") + path + ": " + e.what());
    }
    return parse_config(j);
}

void require_problem(const RunConfig& cfg) {
    if (!cfg.domain) throw ConfigError("this command needs a domain section");
    std::vector<std::string> violations;
    auto d = validate_domain(*cfg.domain);
    violations.insert(violations.end(), d.violations.begin(), d.violations.end());
    if (d.ok) {
        auto f = validate_field(*cfg.domain, cfg.field);
        violations.insert(violations.end(), f.violations.begin(), f.violations.end());
    }
    if (!violations.empty()) throw ConfigError("invalid problem", violations);
    if (cfg.domain->kind == DomainKind::Sphere) {
        try {
            total_flux(cfg.field, *cfg.domain);
        } catch (const Error& e) {
            throw ConfigError("invalid problem", {e.what()});
        }
    }
}

}  // namespace acaps

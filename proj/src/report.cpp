#include "acaps/report.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "acaps/conformal.hpp"
#include "acaps/errors.hpp"
#include "acaps/eta_index.hpp"

namespace acaps {

namespace {

double in_pi(double phi) { return phi / kPi; }

Record domain_record(const DomainSpec& d) {
    Record r;
    r["kind"] = to_string(d.kind);
    if (d.kind == DomainKind::Disc) r["outer_radius"] = d.outer_radius;
    r["holes"] = d.holes.size();
    if (d.kind == DomainKind::Sphere) r["omitted_hole"] = d.omitted_hole;
    return r;
}

Record base_record(const RunConfig& cfg) {
    const auto& d = *cfg.domain;
    const auto& f = cfg.field;
    Record r;
    r["domain"] = domain_record(d);
    r["phi_total"] = in_pi(total_flux(f, d));
    r["phi_bulk"] = in_pi(bulk_flux(f));
    Record holes = Record::array();
    for (double v : normalized_hole_fluxes(f)) holes.push_back(in_pi(v));
    r["phi_normalized"] = holes;
    r["q"] = f.q;
    r["kernel_choice"] = to_string(f.kernel_choice);
    return r;
}

int sweep_steps(const SweepRange& s) { return static_cast<int>(std::llround((s.to - s.from) / s.step)); }

}  // namespace

Report cmd_count(const RunConfig& cfg) {
    require_problem(cfg);
    Report rep{"count", {}, {}, true};
    Record r = base_record(cfg);
    auto c = count_zero_modes(*cfg.domain, cfg.field);
    r["count"] = c.count;
    r["chirality"] = to_string(c.chirality);
    rep.rows.push_back(std::move(r));
    return rep;
}

Report cmd_verify(const RunConfig& cfg) {
    require_problem(cfg);
    Report rep{"verify", {}, {}, true};
    const auto& d = *cfg.domain;
    auto basis = build_basis(d, cfg.field);
    if (d.kind == DomainKind::Sphere) rep.notes.push_back(sphere_to_disc(d, cfg.field).note);
    const auto& p = *basis.potential;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        ZeroMode m = basis.mode(k);
        auto v = verify_mode(m, p, cfg.grid, cfg.tolerances);
        Record r = base_record(cfg);
        r["count"] = basis.size();
        r["chirality"] = to_string(basis.chirality);
        r["mode_degree"] = basis.degrees[k];
        Record res;
        res["pde"] = v.pde_residual;
        res["pde_half_step"] = v.pde_residual_half_step;
        Record leak = Record::array(), names = Record::array();
        for (const auto& l : v.trace_leakage) {
            leak.push_back(l.value);
            names.push_back(l.boundary);
        }
        res["leakage"] = leak;
        res["leakage_boundaries"] = names;
        if (v.exponent_ok) res["exponent_ok"] = *v.exponent_ok;
        if (v.decay_exponent) res["decay_exponent"] = *v.decay_exponent;
        r["residuals"] = res;
        bool ext = true;
        for (std::size_t h : d.inner_holes()) ext = ext && analytic_extension_check(m, p, h);
        r["analytic_extension"] = ext;
        r["conformal_dressing"] = v.conformal;
        r["samples"] = v.samples;
        bool pass = v.pass && ext;
        r["pass"] = pass;
        rep.all_pass = rep.all_pass && pass;
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

Report cmd_sweep(const RunConfig& cfg) {
    Report rep{"sweep", {}, {}, true};
    const double q = cfg.field.q;
    const auto kc = cfg.field.kernel_choice;
    rep.notes.push_back("plane: no holes; disc: radius 2, no holes; bulk flux in one uniform bump of radius 1 at the origin");
    const int steps = sweep_steps(cfg.sweep);
    std::optional<long> prev_plane, prev_disc;
    for (int k = 0; k <= steps; ++k) {
        double phi_pi = cfg.sweep.from + k * cfg.sweep.step;
        double phi = kPi * phi_pi;
        FieldSpec f;
        f.q = q;
        f.kernel_choice = kc;
        if (phi != 0.0) f.bumps.push_back({Complex(0.0, 0.0), 1.0, phi, Profile::UniformDisc});
        auto plane = count_zero_modes(DomainSpec::plane(), f);
        auto disc_dom = DomainSpec::disc(2.0);
        auto disc = count_zero_modes(disc_dom, f);
        Record r;
        r["phi_total"] = phi_pi;
        r["count_plane"] = plane.count;
        r["chirality_plane"] = to_string(plane.chirality);
        r["count_disc"] = disc.count;
        r["chirality_disc"] = to_string(disc.chirality);
        if (kc == KernelChoice::Default) {
            auto ix = index_formula(disc_dom, f);
            r["index"] = ix.index;
            r["eta"] = Record::array({ix.eta_outer});
            r["ker"] = Record::array({ix.ker_outer});
        }
        bool jp = prev_plane && *prev_plane != plane.count;
        bool jd = prev_disc && *prev_disc != disc.count;
        r["jump_plane"] = jp;
        r["jump_disc"] = jd;
        if (jp) rep.notes.push_back("plane count jumps " + std::to_string(*prev_plane) + " -> " + std::to_string(plane.count) + " between phi/pi = " + format_number(phi_pi - cfg.sweep.step) + " and " + format_number(phi_pi));
        if (jd) rep.notes.push_back("disc count jumps " + std::to_string(*prev_disc) + " -> " + std::to_string(disc.count) + " between phi/pi = " + format_number(phi_pi - cfg.sweep.step) + " and " + format_number(phi_pi));
        prev_plane = plane.count;
        prev_disc = disc.count;
        if (cfg.bm) {
            BMConfig b = cfg.bm->cfg;
            b.phi = phi;
            auto m = bm_zero_mode(b);
            r["bm_mode"] = m.has_value();
        }
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

Report cmd_eta(const RunConfig& cfg) {
    Report rep{"eta", {}, {}, true};
    for (double c : cfg.eta.c) {
        Record r;
        r["c"] = c;
        auto fr = frac_open(c);
        if (!fr) throw Error(ErrorKind::InvalidArgument, "eta needs non-integer c");
        double closed = eta_closed(c);
        auto cont = eta_continued(c, cfg.eta.terms, cfg.eta.s_nodes);
        r["eta_closed"] = closed;
        r["eta_continued"] = cont.value;
        r["abs_error"] = std::abs(cont.value - closed);
        Record nodes = Record::array(), parts = Record::array();
        for (std::size_t i = 0; i < cont.s_nodes.size(); ++i) {
            auto s = eta_series(c, cont.s_nodes[i], cfg.eta.terms);
            nodes.push_back(cont.s_nodes[i]);
            parts.push_back(s.value);
        }
        r["s_nodes"] = nodes;
        r["eta_s"] = parts;
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

Report cmd_index(const RunConfig& cfg) {
    require_problem(cfg);
    Report rep{"index", {}, {}, true};
    Record r = base_record(cfg);
    auto ix = index_formula(*cfg.domain, cfg.field);
    auto cons = index_vs_count(*cfg.domain, cfg.field);
    r["count"] = cons.count;
    r["chirality"] = to_string(cons.chirality);
    r["index"] = ix.index;
    r["index_raw"] = ix.raw;
    r["bulk_term"] = ix.bulk_term;
    Record eta = Record::array(), ker = Record::array();
    for (std::size_t j = 0; j < ix.eta_holes.size(); ++j) {
        eta.push_back(ix.eta_holes[j]);
        ker.push_back(ix.ker_holes[j]);
    }
    eta.push_back(ix.eta_outer);
    ker.push_back(ix.ker_outer);
    r["eta"] = eta;
    r["ker"] = ker;
    r["q_term"] = ix.q_term;
    r["consistent"] = cons.consistent;
    rep.all_pass = cons.consistent;
    rep.rows.push_back(std::move(r));
    return rep;
}

Report cmd_bm(const RunConfig& cfg) {
    if (!cfg.bm) throw ConfigError("this command needs a bm section");
    Report rep{"bm", {}, {}, true};
    const auto& b = cfg.bm->cfg;
    Record r;
    r["r1"] = b.r1;
    r["r_out"] = b.r_out;
    r["s_in"] = b.s_in;
    r["s_out"] = b.s_out;
    r["phi_total"] = in_pi(b.phi);
    auto m = bm_zero_mode(b);
    r["has_mode"] = m.has_value();
    if (m) {
        r["n"] = m->n;
        auto v = bm_verify(b, *m, cfg.grid, cfg.tolerances.residual);
        Record res;
        res["pde"] = v.pde_residual;
        res["boundary_inner"] = v.boundary_residual_inner;
        res["boundary_outer"] = v.boundary_residual_outer;
        r["residuals"] = res;
        r["pass"] = v.pass;
        rep.all_pass = v.pass;
    }
    rep.rows.push_back(std::move(r));
    if (cfg.bm->sweep) {
        const auto& s = *cfg.bm->sweep;
        int points = sweep_steps(s) + 1;
        auto sw = cfg.bm->unbounded ? bm_flux_sweep_unbounded(kPi * s.from, kPi * s.to, points)
                                    : bm_flux_sweep(b, kPi * s.from, kPi * s.to, points);
        if (!sw.reason.empty()) rep.notes.push_back(sw.reason);
        for (const auto& row : sw.rows) {
            Record x;
            x["phi_total"] = in_pi(row.phi);
            x["has_mode"] = row.has_mode;
            if (row.has_mode) x["n"] = row.n;
            rep.rows.push_back(std::move(x));
        }
    }
    return rep;
}

std::string format_number(double x) { return Record(x).dump(); }

std::string to_json(const Report& r) {
    Record out;
    out["command"] = r.command;
    out["rows"] = r.rows;
    out["notes"] = r.notes;
    return out.dump(2) + "\n";
}

namespace {

std::string scalar_text(const Record& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

void flatten(const Record& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + scalar_text(v[i]);
        out.emplace_back(prefix, s);
    } else {
        out.emplace_back(prefix, scalar_text(v));
    }
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace

std::string to_csv(const Report& r) {
    std::vector<std::string> columns;
    std::vector<std::map<std::string, std::string>> cells;
    for (const auto& row : r.rows) {
        std::vector<std::pair<std::string, std::string>> flat;
        flatten(row, "", flat);
        std::map<std::string, std::string> m;
        for (auto& [k, v] : flat) {
            if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
            m[k] = v;
        }
        cells.push_back(std::move(m));
    }
    std::ostringstream os;
    for (const auto& n : r.notes) os << "# " << n << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_cell(columns[i]);
    os << "\n";
    for (const auto& m : cells) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            auto it = m.find(columns[i]);
            os << (i ? "," : "") << (it == m.end() ? "" : csv_cell(it->second));
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace acaps

#include "acaps/zero_modes.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "acaps/conformal.hpp"
#include "acaps/dirac.hpp"
#include "acaps/errors.hpp"

namespace acaps {

const char* to_string(Chirality c) {
    switch (c) {
        case Chirality::Up: return "up";
        case Chirality::Down: return "down";
        case Chirality::None: return "none";
    }
    return "none";
}

namespace {

void require_valid(const DomainSpec& domain, const FieldSpec& field) {
    auto v = validate_domain(domain);
    if (!v.ok) throw Error(ErrorKind::InvalidArgument, v.violations.front());
    auto f = validate_field(domain, field);
    if (!f.ok) throw Error(ErrorKind::InvalidArgument, f.violations.front());
}

}  // namespace

ZeroModeCount count_zero_modes(const DomainSpec& domain, const FieldSpec& field) {
    require_valid(domain, field);
    if (domain.kind == DomainKind::Sphere) {
        auto red = sphere_to_disc(domain, field);
        return count_zero_modes(red.disc, red.field);
    }
    double t = snap(total_flux(field, domain) / kTwoPi);
    ZeroModeCount out;
    if (domain.kind == DomainKind::Plane) {
        if (t == 0.0) return out;
        out.count = floor_strict(std::abs(t));
        if (out.count > 0) out.chirality = t > 0.0 ? Chirality::Up : Chirality::Down;
        return out;
    }
    if (field.kernel_choice == KernelChoice::Default) {
        double y = snap(t + field.q + 0.5);
        out.count = std::abs(floor_strict(y));
        if (out.count > 0) out.chirality = y > 0.0 ? Chirality::Up : Chirality::Down;
    } else {
        double s = snap(t + field.q);
        out.count = std::abs(floor_strict(0.5 - s));
        if (out.count > 0) out.chirality = s >= 0.5 ? Chirality::Up : Chirality::Down;
    }
    return out;
}

ZeroMode ZeroMode::monomial(Chirality chirality, int degree, bool conformal_dressing) {
    if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative monomial degree");
    if (chirality == Chirality::None) throw Error(ErrorKind::InvalidArgument, "a mode needs a chirality");
    ZeroMode m;
    m.chirality = chirality;
    m.coefficients.assign(static_cast<std::size_t>(degree) + 1, Complex(0.0, 0.0));
    m.coefficients.back() = 1.0;
    m.conformal_dressing = conformal_dressing;
    return m;
}

Complex ZeroMode::g(Complex z) const {
    bool down = chirality == Chirality::Down;
    Complex x = down ? std::conj(z) : z;
    Complex s = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) s = s * x + *it;
    for (const auto& f : gauge_factors) {
        Complex d = z - f.center;
        s *= std::pow(down ? std::conj(d) : d, f.exponent);
    }
    return s;
}

int ZeroMode::top_degree() const {
    int top = -1;
    for (std::size_t n = 0; n < coefficients.size(); ++n)
        if (coefficients[n] != Complex(0.0, 0.0)) top = static_cast<int>(n);
    for (const auto& f : gauge_factors) top += f.exponent;
    return top;
}

Spinor evaluate(const ZeroMode& mode, const PotentialField& p, Complex z, bool dressed) {
    double h = p.h(z);
    Complex g = mode.g(z);
    Spinor u{0.0, 0.0};
    if (mode.chirality == Chirality::Up)
        u.up = std::exp(h) * g;
    else if (mode.chirality == Chirality::Down)
        u.down = std::exp(-h) * g;
    if (dressed && mode.conformal_dressing) {
        double s = std::sqrt(1.0 + std::norm(z) / 4.0);
        u.up *= s;
        u.down *= s;
    }
    return u;
}

ZeroMode ZeroModeBasis::mode(std::size_t k) const {
    return ZeroMode::monomial(chirality, degrees.at(k), domain.kind == DomainKind::Sphere);
}

ZeroModeBasis build_basis(const DomainSpec& domain, const FieldSpec& field,
                          std::shared_ptr<const PotentialField> potential) {
    auto c = count_zero_modes(domain, field);
    if (c.count == 0) throw Error(ErrorKind::EmptyBasis, "no zero modes for this configuration");
    ZeroModeBasis b;
    b.chirality = c.chirality;
    for (long n = 0; n < c.count; ++n) b.degrees.push_back(static_cast<int>(n));
    b.potential = potential ? std::move(potential) : std::make_shared<const PotentialField>(domain, field);
    b.domain = domain;
    return b;
}

GridSpec GridSpec::from_resolution(int n) {
    if (n < 8) throw Error(ErrorKind::InvalidArgument, "grid resolution must be at least 8");
    GridSpec g;
    g.angular = n;
    g.radial = std::max(4, n / 4);
    g.bulk_per_radius = std::max(4, n / 8);
    g.bulk_max_points = std::max(16, n / 2);
    g.fd_step = 0.25 / n;
    return g;
}

namespace {

std::vector<double> bump_clearances(const FieldSpec& field, Complex from) {
    std::vector<double> r;
    for (const auto& b : field.bumps) r.push_back(std::abs(b.center - from) - b.support_radius);
    return r;
}

double feature_scale(const PotentialField& p) {
    double s = 1.0;
    const auto& dom = p.domain();
    for (auto k : dom.inner_holes()) s = std::min(s, dom.holes[k].radius);
    for (const auto& b : p.field().bumps) s = std::min(s, b.support_radius);
    return s;
}

double finite_outer(const Annulus& a) {
    return std::isfinite(a.outer) ? a.outer : a.inner * 4.0;
}

void polar_grid(const Annulus& a, const GridSpec& g, std::vector<Complex>& out) {
    double outer = finite_outer(a);
    for (int i = 1; i <= g.radial; ++i) {
        double r = a.inner + (outer - a.inner) * i / (g.radial + 1.0);
        for (int k = 0; k < g.angular; ++k) out.push_back(a.center + std::polar(r, kTwoPi * k / g.angular));
    }
}

std::vector<Complex> sample_points(const PotentialField& p, const GridSpec& g, double step) {
    const auto& dom = p.domain();
    const auto& fld = p.field();
    std::vector<Complex> pts;

    double min_radius = std::numeric_limits<double>::infinity();
    for (auto k : dom.inner_holes()) {
        const auto& h = dom.holes[k];
        min_radius = std::min(min_radius, h.radius);
        polar_grid(annulus_probe(dom, k, bump_clearances(fld, h.center)), g, pts);
    }
    if (dom.bounded()) {
        std::vector<double> reach;
        for (const auto& b : fld.bumps) reach.push_back(std::abs(b.center) + b.support_radius);
        polar_grid(outer_annulus_probe(dom, reach), g, pts);
    }

    double half;
    if (dom.bounded()) {
        half = dom.boundary_radius();
    } else {
        double extent = 1.0, biggest = 0.0;
        for (const auto& h : dom.holes) {
            extent = std::max(extent, std::abs(h.center) + h.radius);
            biggest = std::max(biggest, h.radius);
        }
        for (const auto& b : fld.bumps) {
            extent = std::max(extent, std::abs(b.center) + b.support_radius);
            biggest = std::max(biggest, b.support_radius);
        }
        half = 1.25 * extent + std::max(1.0, biggest);
    }
    if (!std::isfinite(min_radius)) min_radius = feature_scale(p);
    double spacing = std::max(min_radius / g.bulk_per_radius, 2.0 * half / g.bulk_max_points);
    int n = static_cast<int>(std::floor(2.0 * half / spacing));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            Complex z(-half + i * spacing, -half + j * spacing);
            if (contains(dom, z)) pts.push_back(z);
        }
    }

    // A uniform disc has a kink in B at its edge, so stencils straddling it are dropped.
    double reach = 3.0 * step;
    std::erase_if(pts, [&](Complex z) {
        for (const auto& b : fld.bumps) {
            if (b.profile != Profile::UniformDisc) continue;
            if (std::abs(std::abs(z - b.center) - b.support_radius) < reach) return true;
        }
        return false;
    });
    return pts;
}

}  // namespace

VerificationReport verify_mode(const ZeroMode& mode, const PotentialField& p, const GridSpec& grid,
                               const Tolerances& tol) {
    if (mode.chirality == Chirality::None) throw Error(ErrorKind::InvalidArgument, "mode has no chirality");
    if (!(tol.residual > 0.0) || !(tol.leakage > 0.0))
        throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
    const auto& dom = p.domain();
    VerificationReport rep;
    rep.tolerances = tol;
    rep.conformal = mode.conformal_dressing;

    double step = grid.fd_step * feature_scale(p);
    auto pts = sample_points(p, grid, step);
    rep.samples = pts.size();

    auto u = [&](Complex z) { return evaluate(mode, p, z, true); };
    auto v = [&](Complex z) { return evaluate(mode, p, z, false); };

    double max_u = 0.0, max_d1 = 0.0, max_d2 = 0.0;
    for (Complex z : pts) {
        max_u = std::max(max_u, norm(u(z)));
        max_d1 = std::max(max_d1, norm(dirac_fd(u, p, z, step, mode.conformal_dressing)));
        max_d2 = std::max(max_d2, norm(dirac_fd(u, p, z, 0.5 * step, mode.conformal_dressing)));
    }
    if (!(max_u > 0.0)) throw Error(ErrorKind::DomainError, "mode vanishes on the sample grid");
    rep.pde_residual = max_d1 / max_u;
    rep.pde_residual_half_step = max_d2 / max_u;
    rep.richardson_ratio = rep.pde_residual_half_step > 0.0 ? rep.pde_residual / rep.pde_residual_half_step : 0.0;
    if (std::abs(rep.pde_residual - rep.pde_residual_half_step) > 10.0 * tol.residual)
    {
        char buf[160];
        std::snprintf(buf, sizeof buf, "finite-difference residual changes from %.3e to %.3e under step halving",
                      rep.pde_residual, rep.pde_residual_half_step);
        throw Error(ErrorKind::GridTooCoarse, buf);
    }

    // Leakage is measured on the flat mode's trace, relative to that trace's own norm,
    // so it does not depend on how large the mode gets inside a concentrated bump.
    auto spectra = boundary_spectra(p);
    bool leak_ok = true;
    for (const auto& s : spectra) {
        auto tr = boundary_trace(v, p, s, grid.trace_log2_samples, grid.l_max);
        double total = check_norm(tr, s);
        double value = total > 0.0 ? leakage(tr, s) / total : 0.0;
        std::string name = s.outer ? "outer" : "hole " + std::to_string(s.hole_index);
        rep.trace_leakage.push_back({name, value});
        leak_ok = leak_ok && value < tol.leakage;
    }

    bool exp_ok = true;
    if (dom.kind == DomainKind::Plane) {
        double t = p.total_flux() / kTwoPi;
        double growth = mode.chirality == Chirality::Up ? mode.top_degree() - t : mode.top_degree() + t;
        rep.exponent_ok = snap(growth) < -1.0;
        double m3 = 0.0, m4 = 0.0;
        for (int k = 0; k < 32; ++k) {
            Complex e = std::polar(1.0, kTwoPi * (k + 0.5) / 32.0);
            m3 = std::max(m3, norm(v(1e3 * e)));
            m4 = std::max(m4, norm(v(1e4 * e)));
        }
        rep.decay_exponent = std::log10(m4 / m3);
        exp_ok = *rep.exponent_ok && *rep.decay_exponent < -1.0;
    }

    rep.pass = rep.pde_residual < tol.residual && leak_ok && exp_ok;
    return rep;
}

bool analytic_extension_check(const std::function<Complex(Complex)>& g, Chirality chirality,
                              const PotentialField& p, std::size_t hole_index) {
    const auto& dom = p.domain();
    Annulus ann = annulus_probe(dom, hole_index, bump_clearances(p.field(), dom.holes.at(hole_index).center));
    double outer = finite_outer(ann);
    const int n_samples = 256;
    const int l_max = 16;
    const double fractions[3] = {0.1, 0.2, 0.3};
    std::vector<Complex> coeff(2 * l_max + 1, Complex(0.0, 0.0));
    for (double f : fractions) {
        double r = ann.inner + (outer - ann.inner) * f;
        double rel = r / ann.inner;
        std::vector<Complex> vals(n_samples);
        for (int k = 0; k < n_samples; ++k) vals[k] = g(ann.center + std::polar(r, kTwoPi * k / n_samples));
        for (int n = -l_max; n <= l_max; ++n) {
            int idx = chirality == Chirality::Down ? -n : n;
            Complex s = 0.0;
            for (int k = 0; k < n_samples; ++k) s += vals[k] * std::polar(1.0, -kTwoPi * idx * k / n_samples);
            coeff[n + l_max] += s / static_cast<double>(n_samples) / std::pow(rel, n) / 3.0;
        }
    }
    double max_all = 0.0, max_neg = 0.0;
    for (int n = -l_max; n <= l_max; ++n) {
        double m = std::abs(coeff[n + l_max]);
        max_all = std::max(max_all, m);
        if (n < 0) max_neg = std::max(max_neg, m);
    }
    return max_neg < 1e-6 * max_all;
}

bool analytic_extension_check(const ZeroMode& mode, const PotentialField& p, std::size_t hole_index) {
    auto g = [&](Complex z) {
        Spinor v = evaluate(mode, p, z, false);
        double h = p.h(z);
        return mode.chirality == Chirality::Up ? v.up * std::exp(-h) : v.down * std::exp(h);
    };
    return analytic_extension_check(g, mode.chirality, p, hole_index);
}

}  // namespace acaps

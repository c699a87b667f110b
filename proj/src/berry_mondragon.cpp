#include "acaps/berry_mondragon.hpp"

#include "acaps/dirac.hpp"
#include "acaps/errors.hpp"

namespace acaps {

void validate_bm(const BMConfig& cfg) {
    if (!(cfg.r1 > 0.0) || !(cfg.r_out > cfg.r1)) throw Error(ErrorKind::InvalidArgument, "need 0 < R1 < R_out");
    if (cfg.s_in == 0.0 || cfg.s_out == 0.0) throw Error(ErrorKind::InvalidArgument, "S must be nonzero");
    if (!std::isfinite(cfg.phi)) throw Error(ErrorKind::InvalidArgument, "flux is not finite");
}

Spinor BMMode::operator()(Complex z) const {
    double r = std::abs(z);
    double t = phi / kTwoPi;
    Complex down = down_amplitude * std::pow(r, t) * std::pow(std::conj(z), static_cast<double>(-n));
    Complex up = up_amplitude * std::pow(r, -t) * std::pow(z, static_cast<double>(n - 1));
    return {up, down};
}

std::optional<BMMode> bm_zero_mode(const BMConfig& cfg) {
    validate_bm(cfg);
    double k = -cfg.s_in / cfg.s_out;
    if (!(k > 0.0)) return std::nullopt;
    // Coefficient matching on both circles: R1^p = K R_out^p with p = Phi/pi - 2n + 1.
    double p = k == 1.0 ? 0.0 : std::log(k) / std::log(cfg.r1 / cfg.r_out);
    auto n = as_integer((cfg.phi / kPi + 1.0 - p) / 2.0);
    if (!n) return std::nullopt;
    BMMode m;
    m.n = *n;
    m.phi = cfg.phi;
    m.exponent = p;
    m.up_amplitude = Complex(0.0, std::pow(cfg.r1, p) / cfg.s_in);
    return m;
}

BMReport bm_verify(const BMConfig& cfg, const BMMode& mode, const GridSpec& grid, double residual_tol,
                   double boundary_tol) {
    validate_bm(cfg);
    BMReport rep;
    rep.residual_tol = residual_tol;
    rep.boundary_tol = boundary_tol;

    FieldSpec field;
    field.hole_fluxes = {mode.phi};
    PotentialField p(DomainSpec::disc(cfg.r_out, {Hole{0.0, cfg.r1}}), field, false);

    auto u = [&](Complex z) { return mode(z); };
    double step = grid.fd_step * cfg.r1;
    double max_u = 0.0, d1 = 0.0, d2 = 0.0;
    for (int i = 1; i <= grid.radial; ++i) {
        double r = cfg.r1 + (cfg.r_out - cfg.r1) * i / (grid.radial + 1.0);
        for (int k = 0; k < grid.angular; ++k) {
            Complex z = std::polar(r, kTwoPi * k / grid.angular);
            max_u = std::max(max_u, norm(u(z)));
            d1 = std::max(d1, norm(dirac_fd(u, p, z, step)));
            d2 = std::max(d2, norm(dirac_fd(u, p, z, 0.5 * step)));
        }
    }

    const int n_boundary = 512;
    const Complex i(0.0, 1.0);
    double bi = 0.0, bo = 0.0;
    for (int k = 0; k < n_boundary; ++k) {
        Complex e = std::polar(1.0, kTwoPi * k / n_boundary);
        Spinor a = u(cfg.r1 * e), b = u(cfg.r_out * e);
        max_u = std::max({max_u, norm(a), norm(b)});
        bi = std::max(bi, std::abs(a.down + cfg.s_in * i * e * a.up));
        bo = std::max(bo, std::abs(b.down - cfg.s_out * i * e * b.up));
    }
    if (!(max_u > 0.0)) throw Error(ErrorKind::DomainError, "mode vanishes on the sample grid");
    rep.pde_residual = d1 / max_u;
    rep.pde_residual_half_step = d2 / max_u;
    if (std::abs(rep.pde_residual - rep.pde_residual_half_step) > 10.0 * residual_tol)
        throw Error(ErrorKind::GridTooCoarse, "finite-difference residual changes under step halving");
    rep.boundary_residual_inner = bi / max_u;
    rep.boundary_residual_outer = bo / max_u;
    rep.pass = rep.pde_residual < residual_tol && rep.boundary_residual_inner < boundary_tol &&
               rep.boundary_residual_outer < boundary_tol;
    return rep;
}

namespace {

std::vector<double> sweep_points(double lo, double hi, int points) {
    if (points < 2) throw Error(ErrorKind::InvalidArgument, "a sweep needs at least two points");
    std::vector<double> out;
    for (int k = 0; k < points; ++k) out.push_back(lo + (hi - lo) * k / (points - 1.0));
    return out;
}

}  // namespace

BMSweep bm_flux_sweep(const BMConfig& cfg, double phi_lo, double phi_hi, int points) {
    BMSweep out;
    for (double phi : sweep_points(phi_lo, phi_hi, points)) {
        BMConfig c = cfg;
        c.phi = phi;
        auto m = bm_zero_mode(c);
        out.rows.push_back({phi, m.has_value(), m ? m->n : 0});
    }
    return out;
}

BMSweep bm_flux_sweep_unbounded(double phi_lo, double phi_hi, int points) {
    BMSweep out;
    for (double phi : sweep_points(phi_lo, phi_hi, points)) out.rows.push_back({phi, false, 0});
    out.reason = "single hole in the plane: square integrability at infinity rules out every coefficient";
    return out;
}

}  // namespace acaps

#include "acaps/potential.hpp"

#include <array>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "acaps/errors.hpp"

namespace acaps {

namespace {

double smooth_weight_log(double v) {
    if (v >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - v)) * std::log(v);
}

// Taylor coefficients of exp(-1/(1-v)) at v = 0, from n f_n = sum_k k g_k f_{n-k} with g_k = -1.
const std::array<double, 40>& smooth_taylor() {
    static const std::array<double, 40> coeffs = [] {
        std::array<double, 40> f{};
        f[0] = std::exp(-1.0);
        for (std::size_t n = 1; n < f.size(); ++n) {
            double s = 0.0;
            for (std::size_t k = 1; k <= n; ++k) s -= static_cast<double>(k) * f[n - k];
            f[n] = s / static_cast<double>(n);
        }
        return f;
    }();
    return coeffs;
}

// Integral of exp(-1/(1-v)) log(v) over [0, x] for small x, termwise.
double smooth_log_head(double x) {
    if (x <= 0.0) return 0.0;
    double lx = std::log(x), s = 0.0, xp = x;
    const auto& f = smooth_taylor();
    for (std::size_t k = 0; k < f.size(); ++k) {
        double k1 = static_cast<double>(k + 1);
        s += f[k] * xp * (lx / k1 - 1.0 / (k1 * k1));
        xp *= x;
    }
    return s;
}

constexpr double kLogSplit = 0.1;

// Integral of exp(-1/(1-v)) log(v) over [x, 1]. Away from the log singularity a
// single 61-point Kronrod panel is accurate to roundoff; below the split the
// head is integrated termwise from the Taylor series.
double smooth_log_moment(double x) {
    using boost::math::quadrature::gauss_kronrod;
    if (x >= kLogSplit) return gauss_kronrod<double, 61>::integrate(smooth_weight_log, x, 1.0, 0, 0.0);
    static const double upper = gauss_kronrod<double, 61>::integrate(smooth_weight_log, kLogSplit, 1.0, 0, 0.0);
    static const double head = smooth_log_head(kLogSplit);
    return upper + head - smooth_log_head(x);
}

// Winding of arg(z - w) along the circle arc, measured from angle 0.
double arg_change(Complex center, double radius, Complex w, double phi) {
    Complex e = std::polar(1.0, phi);
    Complex eps = (w - center) / radius;
    if (std::abs(eps) < 1.0)
        return phi + std::arg(1.0 - eps * std::conj(e)) - std::arg(1.0 - eps);
    Complex z = center + radius * e;
    Complex z0 = center + radius;
    return std::arg((z - w) / (z0 - w));
}

}  // namespace

PotentialField::PotentialField(DomainSpec domain, FieldSpec field, bool normalize_holes)
    : domain_(std::move(domain)), field_(std::move(field)), normalized_(normalize_holes) {
    if (field_.hole_fluxes.size() != domain_.holes.size())
        throw Error(ErrorKind::InvalidArgument, "hole flux count does not match the domain");
    for (auto k : domain_.inner_holes()) {
        double f = field_.hole_fluxes[k];
        if (normalize_holes) f = normalize_flux(f, field_.q, field_.kernel_choice).value;
        sources_.push_back({domain_.holes[k].center, f});
    }
}

double PotentialField::total_flux() const {
    double s = bulk_flux(field_);
    for (const auto& p : sources_) s += p.flux;
    return s;
}

double PotentialField::bump_h(const RadialBump& b, Complex z) const {
    double r = std::abs(z - b.center);
    double rho = b.support_radius;
    double k = b.flux / kTwoPi;
    if (r >= rho) return -k * std::log(r);
    double t2 = (r / rho) * (r / rho);
    if (b.profile == Profile::UniformDisc) return -k * std::log(rho) + 0.5 * k * (1.0 - t2);
    // h(r) = h(rho) + k * int_t^1 Phi_frac(tau)/tau dtau, rewritten in v = tau^2.
    double mass = smooth_profile::total_mass();
    double inner = t2 > 0.0 ? -std::log(t2) * smooth_profile::partial_mass(t2) : 0.0;
    double radial = (inner - smooth_log_moment(t2)) / (2.0 * mass);
    return -k * std::log(rho) + k * radial;
}

double PotentialField::h(Complex z) const {
    double s = 0.0;
    for (const auto& p : sources_) {
        double r = std::abs(z - p.center);
        if (r == 0.0) throw Error(ErrorKind::SingularPoint, "h evaluated at a hole centre");
        s -= p.flux / kTwoPi * std::log(r);
    }
    for (const auto& b : field_.bumps) s += bump_h(b, z);
    return s;
}

Complex PotentialField::a(Complex z) const {
    Complex s = 0.0;
    for (const auto& p : sources_) {
        Complex d = z - p.center;
        if (d == Complex(0.0, 0.0)) throw Error(ErrorKind::SingularPoint, "a evaluated at a hole centre");
        s += Complex(0.0, p.flux / kTwoPi) / std::conj(d);
    }
    for (const auto& b : field_.bumps) {
        Complex d = z - b.center;
        double r = std::abs(d);
        if (r == 0.0) continue;
        s += Complex(0.0, b.enclosed_flux(r) / kTwoPi) / std::conj(d);
    }
    return s;
}

double PotentialField::arc_integral(Complex center, double radius, double phi) const {
    double s = 0.0;
    for (const auto& p : sources_) s += p.flux / kTwoPi * arg_change(center, radius, p.center, phi);
    for (const auto& b : field_.bumps) {
        double d = std::abs(b.center - center);
        if (std::abs(d - radius) <= b.support_radius)
            throw Error(ErrorKind::InvalidArgument, "circle crosses a bump support");
        s += b.flux / kTwoPi * arg_change(center, radius, b.center, phi);
    }
    return s;
}

double eval_h(const PotentialField& p, Complex z) { return p.h(z); }
Complex eval_a(const PotentialField& p, Complex z) { return p.a(z); }

HAsymptotics h_asymptotics(const PotentialField& p) {
    HAsymptotics out;
    out.slope = -p.total_flux() / kTwoPi;
    out.error_order = "O(1/|z|)";
    out.radii = {1e2, 1e3, 1e4};
    const int n_angles = 64;
    for (int i = 0; i < 3; ++i) {
        double worst = 0.0;
        for (int k = 0; k < n_angles; ++k) {
            Complex z = std::polar(out.radii[i], kTwoPi * k / n_angles);
            worst = std::max(worst, std::abs(p.h(z) - out.slope * std::log(out.radii[i])));
        }
        out.residuals[i] = worst;
    }
    const double slack = 1e-12;
    out.decreasing = out.residuals[1] <= out.residuals[0] + slack && out.residuals[2] <= out.residuals[1] + slack;
    return out;
}

}  // namespace acaps

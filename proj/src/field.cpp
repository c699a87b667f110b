#include "acaps/field.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/expint.hpp>

#include "acaps/errors.hpp"

namespace acaps {

const char* to_string(Profile p) {
    return p == Profile::UniformDisc ? "uniform" : "smooth";
}

const char* to_string(KernelChoice k) {
    return k == KernelChoice::Default ? "default" : "alternate";
}

namespace smooth_profile {

double total_mass() {
    static const double mass = boost::math::expint(2, 1.0);
    return mass;
}

double partial_mass(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return total_mass();
    if (x <= 0.5) {
        auto f = [](double v) { return std::exp(-1.0 / (1.0 - v)); };
        return boost::math::quadrature::gauss<double, 30>::integrate(f, 0.0, x);
    }
    // Integral over [x, 1] with w = 1/v is E_2(1) - a E_2(1/a), a = 1 - x.
    double a = 1.0 - x;
    double tail = 1.0 / a > 700.0 ? 0.0 : a * boost::math::expint(2, 1.0 / a);
    return total_mass() - tail;
}

}  // namespace smooth_profile

double RadialBump::density(Complex z) const {
    double r = std::abs(z - center);
    if (r > support_radius) return 0.0;
    double rho2 = support_radius * support_radius;
    if (profile == Profile::UniformDisc) return flux / (kPi * rho2);
    double t = r / support_radius;
    if (t >= 1.0) return 0.0;
    return flux * std::exp(-1.0 / (1.0 - t * t)) / (kPi * rho2 * smooth_profile::total_mass());
}

double RadialBump::enclosed_flux(double r) const {
    if (r >= support_radius) return flux;
    double t2 = (r / support_radius) * (r / support_radius);
    if (profile == Profile::UniformDisc) return flux * t2;
    return flux * smooth_profile::partial_mass(t2) / smooth_profile::total_mass();
}

NormalizedFlux normalize_flux(double phi, double q, KernelChoice kernel_choice) {
    double turns = phi / kTwoPi;
    long m = 0;
    if (kernel_choice == KernelChoice::Default)
        m = static_cast<long>(std::floor(snap(turns + q + 0.5)));
    else
        m = static_cast<long>(std::ceil(snap(turns + q - 0.5)));
    return {phi - kTwoPi * static_cast<double>(m), m};
}

ValidationResult validate_field(const DomainSpec& domain, const FieldSpec& field) {
    ValidationResult res;
    auto fail = [&](std::string msg) {
        res.ok = false;
        res.violations.push_back(std::move(msg));
    };
    if (field.hole_fluxes.size() != domain.holes.size())
        fail("expected " + std::to_string(domain.holes.size()) + " hole fluxes, got " +
             std::to_string(field.hole_fluxes.size()));
    for (std::size_t k = 0; k < field.hole_fluxes.size(); ++k)
        if (!std::isfinite(field.hole_fluxes[k])) fail("hole flux " + std::to_string(k) + " is not finite");
    if (!std::isfinite(field.q)) fail("q is not finite");

    for (std::size_t b = 0; b < field.bumps.size(); ++b) {
        const auto& bump = field.bumps[b];
        std::string name = "bump " + std::to_string(b);
        if (!(bump.support_radius > 0.0)) fail(name + " has non-positive radius");
        if (!std::isfinite(bump.flux)) fail(name + " flux is not finite");
        for (auto k : domain.inner_holes()) {
            const auto& h = domain.holes[k];
            if (!(std::abs(bump.center - h.center) > bump.support_radius + h.radius))
                fail(name + " touches hole " + std::to_string(k));
        }
        if (domain.bounded() && !(std::abs(bump.center) + bump.support_radius < domain.boundary_radius()))
            fail(name + " not inside the outer boundary");
    }
    return res;
}

double bulk_flux(const FieldSpec& field) {
    double s = 0.0;
    for (const auto& b : field.bumps) s += b.flux;
    return s;
}

std::vector<double> normalized_hole_fluxes(const FieldSpec& field) {
    std::vector<double> out;
    out.reserve(field.hole_fluxes.size());
    for (double phi : field.hole_fluxes) out.push_back(normalize_flux(phi, field.q, field.kernel_choice).value);
    return out;
}

double total_flux(const FieldSpec& field, const DomainSpec& domain) {
    if (field.hole_fluxes.size() != domain.holes.size())
        throw Error(ErrorKind::InvalidArgument, "hole flux count does not match the domain");
    double phi = bulk_flux(field);
    if (domain.kind == DomainKind::Sphere) {
        double raw = phi, scale = std::abs(phi);
        for (double f : field.hole_fluxes) {
            raw += f;
            scale += std::abs(f);
        }
        if (std::abs(raw) > 1e-9 * (1.0 + scale))
            throw Error(ErrorKind::SphereFluxMismatch, "fluxes on the sphere must sum to zero");
    }
    auto norm = normalized_hole_fluxes(field);
    for (auto k : domain.inner_holes()) phi += norm[k];
    return phi;
}

double eval_B(const FieldSpec& field, Complex z) {
    double s = 0.0;
    for (const auto& b : field.bumps) s += b.density(z);
    return s;
}

}  // namespace acaps

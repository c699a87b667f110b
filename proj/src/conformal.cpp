#include "acaps/conformal.hpp"

#include <array>

#include "acaps/errors.hpp"

namespace acaps {

Complex MobiusCoeffs::operator()(Complex z) const {
    Complex den = c * z + d;
    if (den == Complex(0.0, 0.0)) throw Error(ErrorKind::PolePoint, "point is sent to infinity");
    return (a * z + b) / den;
}

bool MobiusCoeffs::is_sphere_rotation(double tol) const {
    return std::abs(a - std::conj(d)) <= tol && std::abs(b + 4.0 * std::conj(c)) <= tol &&
           std::abs(std::norm(a) + 4.0 * std::norm(c) - 1.0) <= tol;
}

MobiusCoeffs compose(const MobiusCoeffs& o, const MobiusCoeffs& i) {
    return {o.a * i.a + o.b * i.c, o.a * i.b + o.b * i.d, o.c * i.a + o.d * i.c, o.c * i.b + o.d * i.d};
}

MobiusCoeffs inverse(const MobiusCoeffs& m) {
    Complex det = m.det();
    if (std::abs(det) == 0.0) throw Error(ErrorKind::InvalidArgument, "singular Mobius matrix");
    return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

double conformal_factor(Complex z) { return 1.0 / (1.0 + std::norm(z) / 4.0); }

Complex conformal_factor_gradient(Complex z) {
    double w = conformal_factor(z);
    return -0.5 * w * w * z;
}

Complex stereo_project(double theta, double phi) {
    if (theta == 0.0) throw Error(ErrorKind::NorthPole, "the north pole has no projection");
    return std::polar(2.0 / std::tan(theta / 2.0), -phi);
}

std::pair<double, double> stereo_unproject(Complex z) {
    double r = std::abs(z);
    double theta = r == 0.0 ? kPi : 2.0 * std::atan(2.0 / r);
    double phi = r == 0.0 ? 0.0 : -std::arg(z);
    return {theta, phi};
}

MobiusCoeffs mobius_for_point(double theta0, double phi0) {
    double ch = std::cos(theta0 / 2.0), sh = std::sin(theta0 / 2.0);
    return {Complex(ch, 0.0), 2.0 * sh * std::polar(1.0, -phi0), -0.5 * sh * std::polar(1.0, phi0),
            Complex(ch, 0.0)};
}

Spinor patch_spinor(const Spinor& u2, Complex z2, const MobiusCoeffs& m) {
    Complex f = m.c * z2 + m.d;
    double mod = std::abs(f);
    if (mod == 0.0) throw Error(ErrorKind::PolePoint, "cz + d vanishes");
    return {f / mod * u2.up, std::conj(f) / mod * u2.down};
}

double conformal_ratio(Complex z, const MobiusCoeffs& m) {
    double mod2 = std::norm(m.c * z + m.d);
    if (mod2 == 0.0) throw Error(ErrorKind::PolePoint, "cz + d vanishes");
    return 1.0 / mod2;
}

SphereReduction sphere_to_disc(const DomainSpec& domain, const FieldSpec& field) {
    if (domain.kind != DomainKind::Sphere) throw Error(ErrorKind::InvalidArgument, "not a sphere domain");
    auto v = validate_domain(domain);
    if (!v.ok) throw Error(ErrorKind::InvalidArgument, v.violations.front());
    total_flux(field, domain);  // throws SphereFluxMismatch

    SphereReduction out;
    std::vector<Hole> holes;
    out.field = field;
    out.field.hole_fluxes.clear();
    for (auto k : domain.inner_holes()) {
        holes.push_back(domain.holes[k]);
        out.field.hole_fluxes.push_back(field.hole_fluxes[k]);
    }
    out.disc = DomainSpec::disc(domain.boundary_radius(), std::move(holes));
    out.note = "sphere modes are W^(-1/2) times the modes of the projected disc problem";
    return out;
}

namespace {

// Signed angular distance from the south pole along the line through 0 in direction dir.
double signed_angle(double s) { return 2.0 * std::atan(s / 2.0); }

struct Circle {
    Complex center;
    double radius;
};

Circle circle_through(Complex p1, Complex p2, Complex p3) {
    Complex a = p2 - p1, b = p3 - p1;
    double d = 2.0 * (a.real() * b.imag() - a.imag() * b.real());
    if (std::abs(d) < 1e-300) throw Error(ErrorKind::DomainError, "degenerate circle image");
    double a2 = std::norm(a), b2 = std::norm(b);
    Complex c((b.imag() * a2 - a.imag() * b2) / d, (a.real() * b2 - b.real() * a2) / d);
    return {p1 + c, std::abs(c)};
}

Circle map_circle(const MobiusCoeffs& m, Complex center, double radius) {
    std::array<Complex, 3> pts;
    for (int k = 0; k < 3; ++k) pts[static_cast<std::size_t>(k)] = m(center + std::polar(radius, kTwoPi * k / 3.0));
    return circle_through(pts[0], pts[1], pts[2]);
}

}  // namespace

std::pair<double, double> cap_center(const Hole& hole) {
    double r = std::abs(hole.center);
    Complex dir = r > 0.0 ? hole.center / r : Complex(1.0, 0.0);
    double beta = 0.5 * (signed_angle(r + hole.radius) + signed_angle(r - hole.radius));
    if (beta < 0.0) dir = -dir;
    return {kPi - std::abs(beta), -std::arg(dir)};
}

std::pair<DomainSpec, FieldSpec> redesignate_omitted_hole(const DomainSpec& domain, const FieldSpec& field,
                                                           std::size_t new_omitted) {
    if (domain.kind != DomainKind::Sphere) throw Error(ErrorKind::InvalidArgument, "not a sphere domain");
    if (new_omitted >= domain.holes.size()) throw Error(ErrorKind::InvalidArgument, "hole index out of range");
    if (!field.bumps.empty())
        throw Error(ErrorKind::InvalidArgument, "redesignation supports hole-only fields");
    if (new_omitted == domain.omitted_hole) return {domain, field};

    auto [theta, phi] = cap_center(domain.holes[new_omitted]);
    MobiusCoeffs y = mobius_for_point(theta, phi);

    std::vector<Hole> holes(domain.holes.size());
    for (std::size_t k = 0; k < domain.holes.size(); ++k) {
        Circle img = map_circle(y, domain.holes[k].center, domain.holes[k].radius);
        holes[k] = {img.center, img.radius};
    }
    auto& target = holes[new_omitted];
    if (std::abs(target.center) > 1e-8 * std::max(1.0, target.radius))
        throw Error(ErrorKind::DomainError, "rotated hole is not centred at the pole");
    target.center = 0.0;
    return {DomainSpec::sphere(std::move(holes), new_omitted), field};
}

}  // namespace acaps

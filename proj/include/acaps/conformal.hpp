#pragma once

#include <string>
#include <utility>

#include "acaps/field.hpp"

namespace acaps {

struct MobiusCoeffs {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    Complex c{0.0, 0.0};
    Complex d{1.0, 0.0};

    Complex operator()(Complex z) const;
    Complex det() const { return a * d - b * c; }
    // a = conj(d), b = -4 conj(c), |a|^2 + 4|c|^2 = 1, within tol.
    bool is_sphere_rotation(double tol = 1e-10) const;
};

// (outer o inner)(z) = outer(inner(z)).
MobiusCoeffs compose(const MobiusCoeffs& outer, const MobiusCoeffs& inner);
MobiusCoeffs inverse(const MobiusCoeffs& m);

// W(z) = 1 / (1 + |z|^2/4) and its gradient W_x + i W_y.
double conformal_factor(Complex z);
Complex conformal_factor_gradient(Complex z);

Complex stereo_project(double theta, double phi);
// Inverse of stereo_project: (theta, phi) with theta in (0, pi].
std::pair<double, double> stereo_unproject(Complex z);

// Rotation of the sphere, written in projected coordinates, sending the point
// (theta0, phi0) to the north pole (z = infinity).
MobiusCoeffs mobius_for_point(double theta0, double phi0);

Spinor patch_spinor(const Spinor& u2, Complex z2, const MobiusCoeffs& m);
// W(z) / W(m(z)) = |cz + d|^-2 for a sphere rotation.
double conformal_ratio(Complex z, const MobiusCoeffs& m);

struct SphereReduction {
    DomainSpec disc;
    FieldSpec field;
    double dressing_exponent = -0.5;  // sphere mode = W^dressing_exponent * flat mode
    std::string note;
};

SphereReduction sphere_to_disc(const DomainSpec& domain, const FieldSpec& field);

// Spherical cap centre (theta, phi) of a projected disc hole.
std::pair<double, double> cap_center(const Hole& hole);

// Rotates the sphere so that `new_omitted` is the hole around the north pole.
// Only pure hole configurations are supported: bulk bumps are not radial after
// the rotation.
std::pair<DomainSpec, FieldSpec> redesignate_omitted_hole(const DomainSpec& domain, const FieldSpec& field,
                                                           std::size_t new_omitted);

}  // namespace acaps

#pragma once

#include <vector>

#include "acaps/geometry.hpp"

namespace acaps {

enum class Profile { UniformDisc, SmoothCompact };
enum class KernelChoice { Default, Alternate };

const char* to_string(Profile p);
const char* to_string(KernelChoice k);

// Radially symmetric flux density supported on the closed disc |z - center| <= support_radius.
struct RadialBump {
    Complex center;
    double support_radius = 1.0;
    double flux = 0.0;
    Profile profile = Profile::SmoothCompact;

    double density(Complex z) const;
    // Flux through the disc of radius r about the centre.
    double enclosed_flux(double r) const;
};

struct FieldSpec {
    std::vector<RadialBump> bumps;
    std::vector<double> hole_fluxes;
    double q = 0.0;
    KernelChoice kernel_choice = KernelChoice::Default;
};

struct NormalizedFlux {
    double value = 0.0;
    long gauge_integer = 0;
};

// Shifts phi by a multiple of 2pi into [-q-1/2, -q+1/2) turns (Default) or
// (-q-1/2, -q+1/2] turns (Alternate).
NormalizedFlux normalize_flux(double phi, double q, KernelChoice kernel_choice);

ValidationResult validate_field(const DomainSpec& domain, const FieldSpec& field);

double bulk_flux(const FieldSpec& field);
std::vector<double> normalized_hole_fluxes(const FieldSpec& field);

// Bulk plus normalized hole fluxes; on a sphere the omitted hole is left out.
double total_flux(const FieldSpec& field, const DomainSpec& domain);

double eval_B(const FieldSpec& field, Complex z);

namespace smooth_profile {
// Integral of exp(-1/(1-v)) over [0, 1].
double total_mass();
// Integral of exp(-1/(1-v)) over [0, x] for x in [0, 1].
double partial_mass(double x);
}  // namespace smooth_profile

}  // namespace acaps

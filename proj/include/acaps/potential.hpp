#pragma once

#include <array>
#include <string>
#include <vector>

#include "acaps/field.hpp"

namespace acaps {

struct PointSource {
    Complex center;
    double flux = 0.0;
};

// Scalar potential h with -Laplace(h) = B and the vector potential a = h_y - i h_x
// (so that conj(a) = 2i dh/dz). Hole fluxes enter as point sources at the
// hole centres; by default they are the normalized fluxes. On a sphere only the
// inner holes contribute, since the omitted hole lies outside the projected disc.
class PotentialField {
public:
    PotentialField(DomainSpec domain, FieldSpec field, bool normalize_holes = true);

    double h(Complex z) const;
    Complex a(Complex z) const;

    // Line integral of a along the circle |z - center| = radius, counterclockwise
    // from angle 0 to angle phi. Every source must lie strictly inside or outside.
    double arc_integral(Complex center, double radius, double phi) const;

    const DomainSpec& domain() const { return domain_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<PointSource>& point_sources() const { return sources_; }
    double total_flux() const;
    bool normalized() const { return normalized_; }

private:
    double bump_h(const RadialBump& b, Complex z) const;

    DomainSpec domain_;
    FieldSpec field_;
    std::vector<PointSource> sources_;
    bool normalized_;
};

double eval_h(const PotentialField& p, Complex z);
Complex eval_a(const PotentialField& p, Complex z);

struct HAsymptotics {
    double slope = 0.0;
    std::string error_order;
    std::array<double, 3> radii{};
    std::array<double, 3> residuals{};
    bool decreasing = true;
};

HAsymptotics h_asymptotics(const PotentialField& p);

}  // namespace acaps

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "acaps/numeric.hpp"

namespace acaps {

struct Hole {
    Complex center;
    double radius = 1.0;
};

enum class DomainKind { Plane, Disc, Sphere };

const char* to_string(DomainKind kind);

// Sphere domains are stored in projected coordinates. The hole at index
// `omitted_hole` is the one sent around infinity: it must be centred at the
// origin and the region |z| > radius is its image, so the rest of the domain
// is a disc of that radius with the remaining holes removed.
struct DomainSpec {
    DomainKind kind = DomainKind::Plane;
    double outer_radius = 0.0;
    std::vector<Hole> holes;
    std::size_t omitted_hole = 0;

    static DomainSpec plane(std::vector<Hole> holes = {});
    static DomainSpec disc(double outer_radius, std::vector<Hole> holes = {});
    static DomainSpec sphere(std::vector<Hole> holes, std::size_t omitted_hole);

    // Radius of the outer boundary circle (disc radius, or the omitted hole's radius on a sphere).
    double boundary_radius() const;
    bool bounded() const { return kind != DomainKind::Plane; }
    // Holes that bound the domain from inside; excludes the omitted sphere hole.
    std::vector<std::size_t> inner_holes() const;
};

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> violations;
};

ValidationResult validate_domain(const DomainSpec& spec);

// True iff z lies in the open domain.
bool contains(const DomainSpec& spec, Complex z);

struct Annulus {
    Complex center;
    double inner = 0.0;
    double outer = 0.0;  // may be +inf on an unbounded domain with no obstruction
};

// Largest annulus around an inner hole avoiding other holes, the outer boundary
// and the supplied obstruction radii (measured from the hole centre).
Annulus annulus_probe(const DomainSpec& spec, std::size_t hole_index,
                      const std::vector<double>& support_radii);

// Annulus adjacent to the outer boundary; support_radii are the radii (from the
// origin) reached by the bulk field.
Annulus outer_annulus_probe(const DomainSpec& spec, const std::vector<double>& support_radii);

}  // namespace acaps

#include "acaps/geometry.hpp"

#include <algorithm>
#include <limits>

#include "acaps/errors.hpp"

namespace acaps {

const char* to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::Plane: return "plane";
        case DomainKind::Disc: return "disc";
        case DomainKind::Sphere: return "sphere";
    }
    return "unknown";
}

DomainSpec DomainSpec::plane(std::vector<Hole> holes) {
    DomainSpec d;
    d.kind = DomainKind::Plane;
    d.holes = std::move(holes);
    return d;
}

DomainSpec DomainSpec::disc(double outer_radius, std::vector<Hole> holes) {
    DomainSpec d;
    d.kind = DomainKind::Disc;
    d.outer_radius = outer_radius;
    d.holes = std::move(holes);
    return d;
}

DomainSpec DomainSpec::sphere(std::vector<Hole> holes, std::size_t omitted_hole) {
    DomainSpec d;
    d.kind = DomainKind::Sphere;
    d.holes = std::move(holes);
    d.omitted_hole = omitted_hole;
    if (omitted_hole < d.holes.size()) d.outer_radius = d.holes[omitted_hole].radius;
    return d;
}

double DomainSpec::boundary_radius() const {
    if (kind == DomainKind::Sphere && omitted_hole < holes.size()) return holes[omitted_hole].radius;
    return outer_radius;
}

std::vector<std::size_t> DomainSpec::inner_holes() const {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < holes.size(); ++k)
        if (!(kind == DomainKind::Sphere && k == omitted_hole)) idx.push_back(k);
    return idx;
}

ValidationResult validate_domain(const DomainSpec& spec) {
    ValidationResult res;
    auto fail = [&](std::string msg) {
        res.ok = false;
        res.violations.push_back(std::move(msg));
    };

    for (std::size_t k = 0; k < spec.holes.size(); ++k) {
        const auto& h = spec.holes[k];
        if (!(h.radius > 0.0) || !std::isfinite(h.radius))
            fail("hole " + std::to_string(k) + " has non-positive radius");
        if (!std::isfinite(h.center.real()) || !std::isfinite(h.center.imag()))
            fail("hole " + std::to_string(k) + " has non-finite centre");
    }

    if (spec.kind == DomainKind::Sphere) {
        if (spec.holes.empty()) {
            fail("sphere domain needs at least one hole");
            return res;
        }
        if (spec.omitted_hole >= spec.holes.size()) {
            fail("omitted hole index " + std::to_string(spec.omitted_hole) + " out of range");
            return res;
        }
        const auto& n = spec.holes[spec.omitted_hole];
        if (std::abs(n.center) > kThresholdTol * std::max(1.0, n.radius))
            fail("omitted hole " + std::to_string(spec.omitted_hole) + " is not centred at the pole");
    }
    if (spec.kind == DomainKind::Disc && !(spec.outer_radius > 0.0))
        fail("disc outer radius must be positive");

    const auto inner = spec.inner_holes();
    for (std::size_t a = 0; a < inner.size(); ++a) {
        for (std::size_t b = a + 1; b < inner.size(); ++b) {
            const auto& hj = spec.holes[inner[a]];
            const auto& hk = spec.holes[inner[b]];
            if (!(std::abs(hj.center - hk.center) > hj.radius + hk.radius))
                fail("holes " + std::to_string(inner[a]) + "," + std::to_string(inner[b]) + " overlap");
        }
    }
    if (spec.bounded()) {
        double r_out = spec.boundary_radius();
        for (auto k : inner) {
            const auto& h = spec.holes[k];
            if (!(std::abs(h.center) + h.radius < r_out))
                fail("hole " + std::to_string(k) + " not contained");
        }
    }
    return res;
}

bool contains(const DomainSpec& spec, Complex z) {
    for (auto k : spec.inner_holes()) {
        const auto& h = spec.holes[k];
        if (std::abs(z - h.center) <= h.radius) return false;
    }
    if (spec.bounded() && std::abs(z) >= spec.boundary_radius()) return false;
    return true;
}

Annulus annulus_probe(const DomainSpec& spec, std::size_t hole_index,
                      const std::vector<double>& support_radii) {
    const auto inner = spec.inner_holes();
    if (std::find(inner.begin(), inner.end(), hole_index) == inner.end())
        throw Error(ErrorKind::InvalidArgument, "hole index " + std::to_string(hole_index) + " is not an inner hole");
    const auto& hole = spec.holes[hole_index];

    double outer = std::numeric_limits<double>::infinity();
    for (double r : support_radii) outer = std::min(outer, r);
    for (auto k : inner) {
        if (k == hole_index) continue;
        const auto& other = spec.holes[k];
        outer = std::min(outer, std::abs(other.center - hole.center) - other.radius);
    }
    if (spec.bounded()) outer = std::min(outer, spec.boundary_radius() - std::abs(hole.center));

    if (!(outer > hole.radius))
        throw Error(ErrorKind::NoClearance, "no clearance around hole " + std::to_string(hole_index));
    return {hole.center, hole.radius, outer};
}

Annulus outer_annulus_probe(const DomainSpec& spec, const std::vector<double>& support_radii) {
    if (!spec.bounded()) throw Error(ErrorKind::InvalidArgument, "plane has no outer boundary");
    double inner = 0.0;
    for (double r : support_radii) inner = std::max(inner, r);
    for (auto k : spec.inner_holes()) {
        const auto& h = spec.holes[k];
        inner = std::max(inner, std::abs(h.center) + h.radius);
    }
    double outer = spec.boundary_radius();
    if (!(outer > inner)) throw Error(ErrorKind::NoClearance, "no clearance at the outer boundary");
    return {Complex(0.0, 0.0), inner, outer};
}

}  // namespace acaps

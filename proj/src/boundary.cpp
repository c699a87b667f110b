#include "acaps/boundary.hpp"

#include "acaps/errors.hpp"

namespace acaps {

std::vector<BoundarySpectrum> boundary_spectra(const PotentialField& p) {
    std::vector<BoundarySpectrum> out;
    const auto& dom = p.domain();
    const auto& fld = p.field();
    auto inner = dom.inner_holes();
    for (std::size_t i = 0; i < inner.size(); ++i) {
        BoundarySpectrum s;
        s.hole_index = inner[i];
        s.center = dom.holes[inner[i]].center;
        s.radius = dom.holes[inner[i]].radius;
        s.flux = p.point_sources()[i].flux;
        s.q = fld.q;
        s.kernel_choice = fld.kernel_choice;
        out.push_back(s);
    }
    if (dom.bounded()) {
        BoundarySpectrum s;
        s.outer = true;
        s.radius = dom.boundary_radius();
        s.flux = p.total_flux();
        s.q = fld.q;
        s.kernel_choice = fld.kernel_choice;
        out.push_back(s);
    }
    return out;
}

double eigenvalue(const BoundarySpectrum& spec, Spin spin, long ell) {
    double t = spec.flux / kTwoPi;
    double l = static_cast<double>(ell);
    double v;
    if (!spec.outer)
        v = spin == Spin::Up ? (t - 0.5 - l + spec.q) : -(t + 0.5 - l + spec.q);
    else
        v = spin == Spin::Up ? (l - t + 0.5 - spec.q) : (t + 0.5 - l + spec.q);
    return v / spec.radius;
}

bool is_allowed(const BoundarySpectrum& spec, Spin spin, long ell) {
    double t = spec.flux / kTwoPi;
    bool alt = spec.kernel_choice == KernelChoice::Alternate;
    double l = static_cast<double>(ell);
    if (spin == Spin::Up) {
        double x = snap(t - 0.5 + spec.q);
        if (!spec.outer) return alt ? l >= x : l > x;
        return alt ? l <= x : l < x;
    }
    double x = snap(t + 0.5 + spec.q);
    if (!spec.outer) return alt ? l < x : l <= x;
    return alt ? l > x : l >= x;
}

std::function<bool(long)> allowed_set(const BoundarySpectrum& spec, Spin spin) {
    return [spec, spin](long ell) { return is_allowed(spec, spin, ell); };
}

TraceFourier::TraceFourier(long l_max)
    : l_max(l_max), up(static_cast<std::size_t>(2 * l_max + 1)), down(static_cast<std::size_t>(2 * l_max + 1)) {}

Complex TraceFourier::coeff(Spin spin, long ell) const {
    if (ell < -l_max || ell > l_max) return 0.0;
    const auto& v = spin == Spin::Up ? up : down;
    return v[static_cast<std::size_t>(ell + l_max)];
}

Complex& TraceFourier::at(Spin spin, long ell) {
    if (ell < -l_max || ell > l_max) throw Error(ErrorKind::InvalidArgument, "index beyond truncation order");
    auto& v = spin == Spin::Up ? up : down;
    return v[static_cast<std::size_t>(ell + l_max)];
}

namespace {

double weight(double lambda) {
    double w = std::sqrt(1.0 + lambda * lambda);
    return lambda < 0.0 ? w : 1.0 / w;
}

template <class Select>
double weighted_sum(const TraceFourier& c, const BoundarySpectrum& spec, Select select) {
    double s = 0.0;
    for (Spin spin : {Spin::Up, Spin::Down}) {
        for (long ell = -c.l_max; ell <= c.l_max; ++ell) {
            if (!select(spin, ell)) continue;
            s += std::norm(c.coeff(spin, ell)) * weight(eigenvalue(spec, spin, ell));
        }
    }
    return s;
}

}  // namespace

double check_norm(const TraceFourier& coeffs, const BoundarySpectrum& spec) {
    return weighted_sum(coeffs, spec, [](Spin, long) { return true; });
}

double tail_bound(const TraceFourier& coeffs, const BoundarySpectrum& spec) {
    long edge = coeffs.l_max - 10;
    return weighted_sum(coeffs, spec, [&](Spin spin, long ell) {
        return std::abs(ell) > edge && !is_allowed(spec, spin, ell);
    });
}

double leakage(const TraceFourier& coeffs, const BoundarySpectrum& spec) {
    double forbidden =
        weighted_sum(coeffs, spec, [&](Spin spin, long ell) { return !is_allowed(spec, spin, ell); });
    return forbidden + tail_bound(coeffs, spec);
}

TraceFourier boundary_trace(const std::function<Spinor(Complex)>& u, const PotentialField& p,
                            const BoundarySpectrum& spec, int log2_samples, long l_max) {
    if (log2_samples < 1 || log2_samples > 24) throw Error(ErrorKind::InvalidArgument, "bad sample count");
    const long n = 1L << log2_samples;
    if (2 * l_max + 1 > n) throw Error(ErrorKind::InvalidArgument, "truncation order exceeds sample count");

    std::vector<Complex> roots(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) roots[static_cast<std::size_t>(k)] = std::polar(1.0, -kTwoPi * k / n);

    std::vector<Complex> su(static_cast<std::size_t>(n)), sd(static_cast<std::size_t>(n));
    double t = spec.flux / kTwoPi;
    for (long k = 0; k < n; ++k) {
        double phi = kTwoPi * k / n;
        Complex z = spec.center + std::polar(spec.radius, phi);
        double theta = p.arc_integral(spec.center, spec.radius, phi) - t * phi;
        Complex strip = std::polar(1.0, -theta);
        Spinor val = u(z);
        su[static_cast<std::size_t>(k)] = val.up * strip;
        sd[static_cast<std::size_t>(k)] = val.down * strip;
    }

    TraceFourier out(l_max);
    for (long ell = -l_max; ell <= l_max; ++ell) {
        Complex cu = 0.0, cd = 0.0;
        long m = ((ell % n) + n) % n;
        for (long k = 0; k < n; ++k) {
            Complex w = roots[static_cast<std::size_t>((m * k) % n)];
            cu += su[static_cast<std::size_t>(k)] * w;
            cd += sd[static_cast<std::size_t>(k)] * w;
        }
        out.at(Spin::Up, ell) = cu / static_cast<double>(n);
        out.at(Spin::Down, ell) = cd / static_cast<double>(n);
    }
    return out;
}

}  // namespace acaps

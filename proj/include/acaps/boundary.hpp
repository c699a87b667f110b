#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "acaps/potential.hpp"

namespace acaps {

enum class Spin { Up, Down };

// Spectrum of the (q-shifted) boundary operator on one circle. Eigenfunctions
// are psi_l(phi) = exp(i l phi) exp(i int_0^phi a.ds - i flux phi / 2pi), the
// same scalar function for both spin components.
struct BoundarySpectrum {
    bool outer = false;
    std::size_t hole_index = 0;
    Complex center;
    double radius = 1.0;
    double flux = 0.0;  // flux through the circle: hole flux, or the total for the outer boundary
    double q = 0.0;
    KernelChoice kernel_choice = KernelChoice::Default;
};

// Spectra of every boundary circle seen by the potential: inner holes with the
// potential's point-source fluxes, then the outer circle for bounded domains.
std::vector<BoundarySpectrum> boundary_spectra(const PotentialField& p);

double eigenvalue(const BoundarySpectrum& spec, Spin spin, long ell);
bool is_allowed(const BoundarySpectrum& spec, Spin spin, long ell);
std::function<bool(long)> allowed_set(const BoundarySpectrum& spec, Spin spin);

struct TraceFourier {
    long l_max = 64;
    std::vector<Complex> up;    // index ell + l_max
    std::vector<Complex> down;

    explicit TraceFourier(long l_max = 64);
    Complex coeff(Spin spin, long ell) const;
    Complex& at(Spin spin, long ell);
};

double check_norm(const TraceFourier& coeffs, const BoundarySpectrum& spec);

// Norm of the coefficients in the last decade |l| in (l_max - 10, l_max] on the forbidden side.
double tail_bound(const TraceFourier& coeffs, const BoundarySpectrum& spec);

// Forbidden-part norm plus the tail bound.
double leakage(const TraceFourier& coeffs, const BoundarySpectrum& spec);

// Samples u on 2^log2_samples points of the circle, strips the psi phase of
// the potential p and returns the discrete Fourier coefficients |l| <= l_max.
TraceFourier boundary_trace(const std::function<Spinor(Complex)>& u, const PotentialField& p,
                            const BoundarySpectrum& spec, int log2_samples = 11, long l_max = 64);

}  // namespace acaps

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acaps/zero_modes.hpp"

namespace acaps {

// Concentric annulus R1 < |z| < R_out with all flux inside the hole and the
// local condition u- = -S_in i e^{i phi} u+ on |z| = R1, u- = S_out i e^{i phi} u+ on |z| = R_out.
struct BMConfig {
    double r1 = 1.0;
    double r_out = 2.0;
    double phi = 0.0;
    double s_in = 1.0;
    double s_out = -1.0;
};

void validate_bm(const BMConfig& cfg);

// u- = down_amplitude |z|^{Phi/2pi} conj(z)^{-n}, u+ = up_amplitude |z|^{-Phi/2pi} z^{n-1}.
struct BMMode {
    long n = 0;
    double phi = 0.0;
    double exponent = 0.0;  // Phi/pi - 2n + 1
    Complex up_amplitude;
    Complex down_amplitude{1.0, 0.0};

    Spinor operator()(Complex z) const;
};

std::optional<BMMode> bm_zero_mode(const BMConfig& cfg);

struct BMReport {
    double pde_residual = 0.0;
    double pde_residual_half_step = 0.0;
    double boundary_residual_inner = 0.0;
    double boundary_residual_outer = 0.0;
    double residual_tol = 1e-6;
    double boundary_tol = 1e-8;
    bool pass = false;
};

BMReport bm_verify(const BMConfig& cfg, const BMMode& mode, const GridSpec& grid = {}, double residual_tol = 1e-6,
                   double boundary_tol = 1e-8);

struct BMSweepRow {
    double phi = 0.0;
    bool has_mode = false;
    long n = 0;
};

struct BMSweep {
    std::vector<BMSweepRow> rows;
    std::string reason;
};

BMSweep bm_flux_sweep(const BMConfig& cfg, double phi_lo, double phi_hi, int points);

// The single hole in the plane: no mode for any flux.
BMSweep bm_flux_sweep_unbounded(double phi_lo, double phi_hi, int points);

}  // namespace acaps

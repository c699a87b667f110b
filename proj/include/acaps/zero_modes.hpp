#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acaps/boundary.hpp"

namespace acaps {

enum class Chirality { Up, Down, None };

const char* to_string(Chirality c);

struct ZeroModeCount {
    long count = 0;
    Chirality chirality = Chirality::None;
};

ZeroModeCount count_zero_modes(const DomainSpec& domain, const FieldSpec& field);

// Multiplies the (anti-)analytic factor by (z - center)^exponent, or its
// conjugate for spin down. Used to express modes in a non-normalized gauge.
struct GaugeFactor {
    Complex center;
    int exponent = 0;
};

// u+ = e^{h} g(z) for spin up, u- = e^{-h} g(conj z) for spin down, where
// g is the polynomial sum a_n x^n times the gauge factors. Sphere modes carry
// the extra factor W^{-1/2}.
struct ZeroMode {
    Chirality chirality = Chirality::Up;
    std::vector<Complex> coefficients;
    std::vector<GaugeFactor> gauge_factors;
    bool conformal_dressing = false;

    static ZeroMode monomial(Chirality chirality, int degree, bool conformal_dressing = false);

    // The (anti-)analytic factor evaluated at z.
    Complex g(Complex z) const;
    // Growth exponent of g at infinity.
    int top_degree() const;
};

Spinor evaluate(const ZeroMode& mode, const PotentialField& p, Complex z, bool dressed = true);

struct ZeroModeBasis {
    Chirality chirality = Chirality::None;
    std::vector<int> degrees;
    std::shared_ptr<const PotentialField> potential;
    DomainSpec domain;

    std::size_t size() const { return degrees.size(); }
    ZeroMode mode(std::size_t k) const;
};

ZeroModeBasis build_basis(const DomainSpec& domain, const FieldSpec& field,
                          std::shared_ptr<const PotentialField> potential = nullptr);

struct GridSpec {
    int radial = 64;
    int angular = 256;
    int bulk_per_radius = 32;   // bulk spacing is min hole radius / bulk_per_radius ...
    int bulk_max_points = 128;  // ... capped at this many points per side
    double fd_step = 1e-3;      // finite-difference step relative to the smallest feature
    int trace_log2_samples = 11;
    long l_max = 64;

    // One knob for the CLI: n angular samples, the rest scaled from it.
    static GridSpec from_resolution(int n);
};

struct Tolerances {
    double residual = 1e-6;
    double leakage = 1e-6;
};

struct BoundaryLeakage {
    std::string boundary;
    double value = 0.0;
};

struct VerificationReport {
    double pde_residual = 0.0;
    double pde_residual_half_step = 0.0;
    double richardson_ratio = 0.0;
    std::vector<BoundaryLeakage> trace_leakage;
    std::optional<bool> exponent_ok;
    std::optional<double> decay_exponent;
    bool conformal = false;
    std::size_t samples = 0;
    Tolerances tolerances;
    bool pass = false;
};

VerificationReport verify_mode(const ZeroMode& mode, const PotentialField& p, const GridSpec& grid = {},
                               const Tolerances& tol = {});

// Laurent coefficients of g on the probe annulus of an inner hole, averaged
// over three radii. True iff no negative power is visible above 1e-6 of the largest.
bool analytic_extension_check(const ZeroMode& mode, const PotentialField& p, std::size_t hole_index);
bool analytic_extension_check(const std::function<Complex(Complex)>& g, Chirality chirality,
                              const PotentialField& p, std::size_t hole_index);

}  // namespace acaps

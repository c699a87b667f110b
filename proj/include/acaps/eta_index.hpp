#pragma once

#include <optional>
#include <vector>

#include "acaps/zero_modes.hpp"

namespace acaps {

// The representative of c in (0, 1); empty for integer c.
std::optional<double> frac_open(double c);

// Eta invariant of the spectrum {n - c : n in Z}.
double eta_closed(double c);

// Summand of the accelerated series: the difference of the two half-spectra
// at n minus its integral over [n, n+1].
double eta_rho(double s, double cfrac, long n);

// Integral over [1, inf) of (x - c)^-s - (x + c)^-s, continued in s.
double eta_tail_integral(double s, double cfrac);

struct EtaSeries {
    double value = 0.0;
    double tail_bound = 0.0;  // bound on the omitted sum over n > N
};

EtaSeries eta_series(double c, double s, long n_terms);

// Same for the spectrum {alpha (n - c)}.
EtaSeries eta_series_scaled(double alpha, double c, double s, long n_terms);

struct EtaContinuation {
    double value = 0.0;
    std::vector<double> s_nodes;
    std::vector<double> regular_part;  // partial sums of rho at each node
    double regular_at_zero = 0.0;
};

// Value at s = 0: the rho sum is extrapolated from the nodes, the closed-form
// pieces are evaluated at s = 0 directly.
EtaContinuation eta_continued(double c, long n_terms = 10000, std::vector<double> s_nodes = {0.2, 0.1, 0.05});

struct IndexAssembly {
    long index = 0;
    double raw = 0.0;
    double bulk_term = 0.0;
    std::vector<double> eta_holes;
    std::vector<int> ker_holes;
    double eta_outer = 0.0;
    int ker_outer = 0;
    double q_term = 0.0;
};

// Index of the disc problem (spheres are reduced first), assembled from the
// eta invariants of the spin-up boundary spectra.
IndexAssembly index_formula(const DomainSpec& domain, const FieldSpec& field);

struct IndexConsistency {
    long index = 0;
    long count = 0;
    Chirality chirality = Chirality::None;
    long signed_count = 0;
    double raw = 0.0;
    bool consistent = false;
};

IndexConsistency index_vs_count(const DomainSpec& domain, const FieldSpec& field);

}  // namespace acaps

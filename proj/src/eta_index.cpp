#include "acaps/eta_index.hpp"

#include "acaps/conformal.hpp"
#include "acaps/errors.hpp"

namespace acaps {

std::optional<double> frac_open(double c) {
    if (as_integer(c)) return std::nullopt;
    double f = c - std::floor(c);
    return f;
}

double eta_closed(double c) {
    if (!frac_open(c)) return 0.0;
    // 2(c - centre of its unit cell): written this way it is exactly odd in floating point
    return 2.0 * (c - (std::floor(c) + 0.5));
}

namespace {

// Antiderivative of x^-s.
long double antider(long double x, long double s) {
    if (std::abs(s - 1.0L) < 1e-12L) return std::log(x);
    return std::pow(x, 1.0L - s) / (1.0L - s);
}

double checked_frac(double c) {
    auto f = frac_open(c);
    if (!f) throw Error(ErrorKind::InvalidArgument, "the eta series needs non-integer c");
    return *f;
}

}  // namespace

double eta_rho(double s, double cfrac, long n) {
    long double ls = s, c = cfrac, x = static_cast<long double>(n);
    long double diff = std::pow(x - c, -ls) - std::pow(x + c, -ls);
    long double integ = (antider(x + 1.0L - c, ls) - antider(x - c, ls)) - (antider(x + 1.0L + c, ls) - antider(x + c, ls));
    return static_cast<double>(diff - integ);
}

double eta_tail_integral(double s, double cfrac) {
    double c = cfrac;
    if (std::abs(s - 1.0) < 1e-8) return std::log((1.0 + c) / (1.0 - c));
    return (std::pow(1.0 - c, 1.0 - s) - std::pow(1.0 + c, 1.0 - s)) / (s - 1.0);
}

EtaSeries eta_series(double c, double s, long n_terms) {
    if (s <= -1.0) throw Error(ErrorKind::DomainError, "series continuation needs s > -1");
    if (n_terms < 8) throw Error(ErrorKind::InvalidArgument, "need at least 8 terms");
    double cf = checked_frac(c);
    long double sum = 0.0L;
    for (long n = n_terms; n >= 1; --n) sum += eta_rho(s, cf, n);
    EtaSeries out;
    out.value = -std::pow(cf, -s) + static_cast<double>(sum) + eta_tail_integral(s, cf);
    double nn = static_cast<double>(n_terms);
    out.tail_bound = std::abs(s * cf) * std::pow(nn, -s - 1.0) +
                     11.0 * std::abs(s * (s + 1.0) * (s + 2.0)) / (s + 2.0) * std::pow(nn, -s - 2.0);
    return out;
}

EtaSeries eta_series_scaled(double alpha, double c, double s, long n_terms) {
    if (alpha == 0.0) throw Error(ErrorKind::InvalidArgument, "scale must be nonzero");
    // alpha (n - c) with alpha < 0 is |alpha| (m - (1 - c)) after m = 1 - n.
    EtaSeries base = eta_series(alpha > 0.0 ? c : -c, s, n_terms);
    double f = std::pow(std::abs(alpha), -s);
    return {f * base.value, f * base.tail_bound};
}

EtaContinuation eta_continued(double c, long n_terms, std::vector<double> s_nodes) {
    if (s_nodes.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two nodes");
    double cf = checked_frac(c);
    EtaContinuation out;
    out.s_nodes = s_nodes;
    for (double s : s_nodes) {
        long double sum = 0.0L;
        for (long n = n_terms; n >= 1; --n) sum += eta_rho(s, cf, n);
        out.regular_part.push_back(static_cast<double>(sum));
    }
    // Neville evaluation of the interpolating polynomial at s = 0.
    std::vector<double> p = out.regular_part;
    const auto& x = out.s_nodes;
    for (std::size_t k = 1; k < p.size(); ++k)
        for (std::size_t i = p.size() - 1; i >= k; --i) p[i] = (x[i] * p[i - 1] - x[i - k] * p[i]) / (x[i] - x[i - k]);
    out.regular_at_zero = p.back();
    out.value = -1.0 + out.regular_at_zero + eta_tail_integral(0.0, cf);
    return out;
}

IndexAssembly index_formula(const DomainSpec& domain, const FieldSpec& field) {
    if (domain.kind == DomainKind::Sphere) {
        auto red = sphere_to_disc(domain, field);
        return index_formula(red.disc, red.field);
    }
    if (domain.kind != DomainKind::Disc) throw Error(ErrorKind::InvalidArgument, "the index formula needs a disc domain");
    if (field.kernel_choice != KernelChoice::Default)
        throw Error(ErrorKind::InvalidArgument, "the index formula is assembled for the default kernel choice");
    auto v = validate_domain(domain);
    if (!v.ok) throw Error(ErrorKind::InvalidArgument, v.violations.front());

    IndexAssembly out;
    const double q = field.q;
    out.bulk_term = bulk_flux(field) / kTwoPi;
    double raw = out.bulk_term;
    // Spin-up block on a hole has eigenvalues -(l - c)/R with c = t - 1/2 + q.
    for (double phi : normalized_hole_fluxes(field)) {
        double c = phi / kTwoPi - 0.5 + q;
        double eta = -eta_closed(c);
        int ker = as_integer(c) ? 1 : 0;
        out.eta_holes.push_back(eta);
        out.ker_holes.push_back(ker);
        raw -= 0.5 * (eta + ker);
    }
    // Outer spin-up block: eigenvalues (l - c)/R with c = Phi/2pi - 1/2 + q.
    double c_out = total_flux(field, domain) / kTwoPi - 0.5 + q;
    out.eta_outer = eta_closed(c_out);
    out.ker_outer = as_integer(c_out) ? 1 : 0;
    raw -= 0.5 * (out.eta_outer + out.ker_outer);
    out.q_term = (1.0 - static_cast<double>(domain.holes.size())) * q;
    raw += out.q_term;

    out.raw = raw;
    if (std::abs(raw - std::round(raw)) > 1e-9)
        throw Error(ErrorKind::DomainError, "index assembly is not an integer: " + std::to_string(raw));
    out.index = std::lround(raw);
    return out;
}

IndexConsistency index_vs_count(const DomainSpec& domain, const FieldSpec& field) {
    if (domain.kind == DomainKind::Plane) throw Error(ErrorKind::InvalidArgument, "needs a disc or sphere domain");
    IndexConsistency out;
    auto idx = index_formula(domain, field);
    auto cnt = count_zero_modes(domain, field);
    out.index = idx.index;
    out.raw = idx.raw;
    out.count = cnt.count;
    out.chirality = cnt.chirality;
    out.signed_count = cnt.chirality == Chirality::Up ? cnt.count : cnt.chirality == Chirality::Down ? -cnt.count : 0;
    out.consistent = out.signed_count == out.index;
    return out;
}

}  // namespace acaps

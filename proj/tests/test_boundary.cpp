#include <doctest.h>

#include <random>

#include "acaps/boundary.hpp"

using namespace acaps;

namespace {

BoundarySpectrum spec(bool outer, double flux_turns, double q, KernelChoice kc, double radius = 2.0) {
    BoundarySpectrum s;
    s.outer = outer;
    s.radius = radius;
    s.flux = kTwoPi * flux_turns;
    s.q = q;
    s.kernel_choice = kc;
    return s;
}

}  // namespace

TEST_SUITE("boundary") {

TEST_CASE("eigenvalues") {
    auto hole = spec(false, 0.3, 0.1, KernelChoice::Default);
    CHECK(eigenvalue(hole, Spin::Up, 2) == doctest::Approx((0.3 - 0.5 - 2 + 0.1) / 2.0));
    CHECK(eigenvalue(hole, Spin::Down, 2) == doctest::Approx(-(0.3 + 0.5 - 2 + 0.1) / 2.0));
    auto outer = spec(true, 0.3, 0.1, KernelChoice::Default);
    CHECK(eigenvalue(outer, Spin::Up, 2) == doctest::Approx((2 - 0.3 + 0.5 - 0.1) / 2.0));
    CHECK(eigenvalue(outer, Spin::Down, 2) == doctest::Approx((0.3 + 0.5 - 2 + 0.1) / 2.0));
}

TEST_CASE("allowed means negative eigenvalue, zero split by the kernel choice") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> tn(-24, 24), qn(-4, 4);
    for (int i = 0; i < 400; ++i) {
        // quarter-integer fluxes and q hit the zero eigenvalue often
        double t = tn(rng) / 4.0, q = qn(rng) / 4.0;
        for (bool outer : {false, true})
            for (auto kc : {KernelChoice::Default, KernelChoice::Alternate}) {
                auto s = spec(outer, t, q, kc);
                auto up_set = allowed_set(s, Spin::Up);
                for (long l = -12; l <= 12; ++l) {
                    double lu = eigenvalue(s, Spin::Up, l), ld = eigenvalue(s, Spin::Down, l);
                    bool kernel_up = kc == KernelChoice::Alternate;
                    bool expect_up = lu < -1e-12 || (std::abs(lu) <= 1e-12 && kernel_up);
                    bool expect_dn = ld < -1e-12 || (std::abs(ld) <= 1e-12 && !kernel_up);
                    CHECK(is_allowed(s, Spin::Up, l) == expect_up);
                    CHECK(is_allowed(s, Spin::Down, l) == expect_dn);
                    CHECK(up_set(l) == expect_up);
                }
            }
    }
}

TEST_CASE("norm weights") {
    auto s = spec(true, 0.25, 0.0, KernelChoice::Default, 1.0);
    TraceFourier c(16);
    c.at(Spin::Up, 3) = 2.0;  // eigenvalue 3.25 > 0: forbidden
    double lam = eigenvalue(s, Spin::Up, 3);
    CHECK(check_norm(c, s) == doctest::Approx(4.0 / std::sqrt(1.0 + lam * lam)));
    CHECK(leakage(c, s) == doctest::Approx(check_norm(c, s)));
    TraceFourier ok(16);
    ok.at(Spin::Up, -2) = 1.0;  // eigenvalue -1.75: allowed
    CHECK(leakage(ok, s) == 0.0);
    lam = eigenvalue(s, Spin::Up, -2);
    CHECK(check_norm(ok, s) == doctest::Approx(std::sqrt(1.0 + lam * lam)));
    TraceFourier tail(16);
    tail.at(Spin::Down, -15) = 1.0;
    CHECK(tail_bound(tail, s) > 0.0);
}

TEST_CASE("trace of a rotationally symmetric mode is a single coefficient") {
    auto d = DomainSpec::disc(3.0);
    FieldSpec f;
    f.bumps.push_back({{0.0, 0.0}, 1.0, 5.0 * kPi, Profile::SmoothCompact});
    PotentialField p(d, f);
    auto specs = boundary_spectra(p);
    REQUIRE(specs.size() == 1);
    CHECK(specs[0].outer);
    CHECK(specs[0].flux == doctest::Approx(5.0 * kPi));
    const int n = 1;  // degree 2 would sit on the kernel, which spin up does not get
    auto u = [&](Complex z) { return Spinor{std::exp(p.h(z)) * std::pow(z, n), 0.0}; };
    auto tr = boundary_trace(u, p, specs[0], 10, 16);
    double expect = std::exp(p.h(3.0)) * std::pow(3.0, n);
    CHECK(std::abs(tr.coeff(Spin::Up, n)) == doctest::Approx(expect).epsilon(1e-12));
    for (long l = -16; l <= 16; ++l)
        if (l != n) CHECK(std::abs(tr.coeff(Spin::Up, l)) < 1e-12 * expect);
    CHECK(leakage(tr, specs[0]) < 1e-20);
}

TEST_CASE("spectra list inner holes then the outer circle") {
    auto d = DomainSpec::disc(5.0, {{{2.0, 0.0}, 0.5}, {{-2.0, 0.0}, 0.5}});
    FieldSpec f;
    f.hole_fluxes = {0.2 * kPi, 1.4 * kPi};
    PotentialField p(d, f);
    auto s = boundary_spectra(p);
    REQUIRE(s.size() == 3);
    CHECK_FALSE(s[0].outer);
    CHECK(s[1].hole_index == 1);
    CHECK(s[1].flux == doctest::Approx(-0.6 * kPi));
    CHECK(s[2].outer);
    CHECK(s[2].flux == doctest::Approx(-0.4 * kPi));
}

}

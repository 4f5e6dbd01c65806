#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfds/flux_model.hpp"
#include "kfds/kinetic.hpp"
#include "test_util.hpp"

using namespace kfds;
using test_util::close_ulps;

TEST_CASE("equilibrium_1d examples") {
    const KineticPair zero = equilibrium_1d(0.0, 0.0, 3.7);
    CHECK(zero.f_plus == 0.0);
    CHECK(zero.f_minus == 0.0);

    // Burgers state u=1: g = u^2/2 = 0.5
    const KineticPair f = equilibrium_1d(1.0, 0.5, 1.0);
    CHECK(f.f_plus == doctest::Approx(0.75));
    CHECK(f.f_minus == doctest::Approx(0.25));

    CHECK_THROWS_AS(equilibrium_1d(1.0, 0.5, 0.0), StateError);
    CHECK_THROWS_AS(equilibrium_1d(1.0, 0.5, -1.0), StateError);
}

TEST_CASE("moments_1d recovers the macroscopic state") {
    const Moments1D m = moments_1d(equilibrium_1d(1.0, 0.5, 1.0), 1.0);
    CHECK(m.density == doctest::Approx(1.0));
    CHECK(m.flux == doctest::Approx(0.5));
    CHECK(m.second_moment == doctest::Approx(1.0));

    const Moments1D z = moments_1d({0.0, 0.0}, 2.0);
    CHECK(z.density == 0.0);
    CHECK(z.flux == 0.0);
    CHECK(z.second_moment == 0.0);
}

TEST_CASE("equilibrium/moment round-trip identities to 4 ulps") {
    for (int k = 0; k < 10000; ++k) {
        const double u = test_util::uniform(-10.0, 10.0);
        const double g = test_util::uniform(-10.0, 10.0);
        const double lambda = test_util::uniform(0.1, 10.0);
        const KineticPair f = equilibrium_1d(u, g, lambda);
        CHECK(close_ulps(f.f_plus + f.f_minus, u, std::abs(u) + std::abs(g) / lambda));
        const Moments1D m = moments_1d(f, lambda);
        CHECK(close_ulps(m.density, u, std::abs(u) + std::abs(g) / lambda));
        CHECK(close_ulps(m.flux, g, lambda * std::abs(u) + std::abs(g)));
        CHECK(close_ulps(m.second_moment, lambda * lambda * u,
                         lambda * lambda * std::abs(u) + lambda * std::abs(g)));
    }
}

TEST_CASE("split fluxes") {
    const auto s = split_macroscopic_flux(1.0, 0.5, 1.0);
    CHECK(s[0] == doctest::Approx(0.75));
    CHECK(s[1] == doctest::Approx(-0.25));

    const auto z = split_macroscopic_flux(0.0, 0.0, 2.0);
    CHECK(z[0] == 0.0);
    CHECK(z[1] == 0.0);

    for (int k = 0; k < 1000; ++k) {
        const double u = test_util::uniform(-10, 10);
        const double g = test_util::uniform(-10, 10);
        const double lambda = test_util::uniform(0.1, 10.0);
        const auto sp = split_macroscopic_flux(u, g, lambda);
        CHECK(close_ulps(sp[0] + sp[1], g, std::abs(g) + lambda * std::abs(u)));
    }
}

TEST_CASE("chapman-enskog viscous component moments") {
    const ViscousComponent v = chapman_enskog_viscous(0.1, 2.0, 1.0);
    CHECK(v.f_v.f_plus == doctest::Approx(0.1));
    CHECK(v.f_v.f_minus == doctest::Approx(-0.1));
    CHECK(v.density_moment == 0.0);  // exact cancellation
    CHECK(v.flux_moment == doctest::Approx(0.2));
    CHECK(v.second_moment == 0.0);

    const ViscousComponent flat = chapman_enskog_viscous(0.1, 0.0, 2.0);
    CHECK(flat.f_v.f_plus == 0.0);
    CHECK(flat.f_v.f_minus == 0.0);

    for (int k = 0; k < 10000; ++k) {
        const double nu = test_util::uniform(0.0, 2.0);
        const double ux = test_util::uniform(-50.0, 50.0);
        const double lambda = test_util::uniform(0.1, 10.0);
        const ViscousComponent w = chapman_enskog_viscous(nu, ux, lambda);
        const double gv = nu * ux;
        CHECK(w.density_moment == 0.0);
        CHECK(w.second_moment == 0.0);
        CHECK(close_ulps(w.flux_moment, gv, std::abs(gv)));
        CHECK(close_ulps(w.plus_moment, 0.5 * gv, std::abs(gv)));
        CHECK(close_ulps(w.minus_moment, 0.5 * gv, std::abs(gv)));
    }
}

TEST_CASE("limiter ratio form equals the difference form on equilibrium jumps") {
    // phi(r) x with phi = minmod(1, r) and r = upwind/local is the same
    // limited anti-diffusion as minmod(local, upwind); the flux kernels use
    // the difference form to avoid 0/0 at flat data.
    auto minmod = [](double a, double b) {
        if (a * b <= 0.0) return 0.0;
        return std::abs(a) <= std::abs(b) ? a : b;
    };
    for (int k = 0; k < 2000; ++k) {
        const double lambda = test_util::uniform(0.5, 2.0);
        const KineticPair f0 = equilibrium_1d(test_util::uniform(-2, 2),
                                              test_util::uniform(-2, 2), lambda);
        const KineticPair f1 = equilibrium_1d(test_util::uniform(-2, 2),
                                              test_util::uniform(-2, 2), lambda);
        const KineticPair f2 = equilibrium_1d(test_util::uniform(-2, 2),
                                              test_util::uniform(-2, 2), lambda);
        const double local = f2.f_plus - f1.f_plus;
        const double upwind = f1.f_plus - f0.f_plus;
        if (std::abs(local) < 1e-12) continue;
        const double r = upwind / local;
        const double phi = minmod(1.0, r);
        CHECK(phi * local == doctest::Approx(minmod(local, upwind)).epsilon(1e-12));
    }
}

TEST_CASE("equilibrium_2d and moment round-trip") {
    const KineticQuad rest = equilibrium_2d(1.0, 0.0, 0.0, 2.0);
    for (double c : rest.f) CHECK(c == doctest::Approx(0.25));

    const KineticQuad q = equilibrium_2d(0.0, 0.5, 0.0, 1.0);
    CHECK(q.f[0] == doctest::Approx(-0.125));
    CHECK(q.f[1] == doctest::Approx(0.125));
    CHECK(q.f[2] == doctest::Approx(0.125));
    CHECK(q.f[3] == doctest::Approx(-0.125));

    CHECK_THROWS_AS(equilibrium_2d(1, 0, 0, 0.0), StateError);

    for (int k = 0; k < 10000; ++k) {
        const double u = test_util::uniform(-10, 10);
        const double g1 = test_util::uniform(-10, 10);
        const double g2 = test_util::uniform(-10, 10);
        const double lambda = test_util::uniform(0.1, 10.0);
        const Moments2D m = moments_2d(equilibrium_2d(u, g1, g2, lambda), lambda);
        const double scale = std::abs(u) + (std::abs(g1) + std::abs(g2)) / lambda;
        CHECK(close_ulps(m.density, u, scale));
        CHECK(close_ulps(m.flux_x, g1, lambda * scale));
        CHECK(close_ulps(m.flux_y, g2, lambda * scale));
    }
}

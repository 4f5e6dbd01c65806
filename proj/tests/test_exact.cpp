#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kfds/exact.hpp"
#include "test_util.hpp"

using namespace kfds;
namespace ex = kfds::exact;

TEST_CASE("riemann_burgers shock, fan, constant") {
    // s = (1 + -1)/2 = 0: steady shock at x = 0
    CHECK(ex::riemann_burgers(1.0, -1.0, -0.01, 0.5) == 1.0);
    CHECK(ex::riemann_burgers(1.0, -1.0, 0.01, 0.5) == -1.0);

    CHECK(ex::riemann_burgers(0.0, 1.0, 0.5 * 0.3, 0.3) == doctest::Approx(0.5));
    CHECK(ex::riemann_burgers(0.0, 1.0, -0.1, 0.3) == 0.0);
    CHECK(ex::riemann_burgers(0.0, 1.0, 0.4, 0.3) == 1.0);

    CHECK(ex::riemann_burgers(0.7, 0.7, 0.2, 1.0) == 0.7);

    // moving shock for the square-wave case: s = 1/2
    CHECK(ex::riemann_burgers(1.0, 0.0, 0.14, 0.3) == 1.0);
    CHECK(ex::riemann_burgers(1.0, 0.0, 0.16, 0.3) == 0.0);
}

TEST_CASE("linear advection three-state profile translates both jumps") {
    CHECK(ex::linear_advection_profile(-0.5, 0.0) == 0.0);
    CHECK(ex::linear_advection_profile(0.0, 0.0) == 1.0);
    CHECK(ex::linear_advection_profile(0.5, 0.0) == -1.0);

    CHECK(ex::linear_advection_profile(0.6, 0.3) == 1.0);   // jump moved to 1/3+0.3
    CHECK(ex::linear_advection_profile(0.0, 0.3) == 1.0);
    CHECK(ex::linear_advection_profile(0.7, 0.3) == -1.0);
    CHECK(ex::linear_advection_profile(-0.1, 0.3) == 0.0);  // left jump moved too
}

TEST_CASE("advection-diffusion boundary layer profile") {
    CHECK(ex::advection_diffusion_steady(0.0, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ex::advection_diffusion_steady(1.0, 1.0) == doctest::Approx(1.0));
    CHECK(ex::advection_diffusion_steady(0.5, 1.0) == doctest::Approx(0.3775406687981455));
    CHECK(ex::advection_diffusion_steady(0.9, 50.0) ==
          doctest::Approx(0.006737946999085468).epsilon(1e-10));
    CHECK(ex::advection_diffusion_steady(0.0, 50.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ex::advection_diffusion_steady(1.0, 50.0) == doctest::Approx(1.0));
    // Stiff layers must not overflow.
    CHECK(std::isfinite(ex::advection_diffusion_steady(0.5, 5000.0)));
    CHECK_THROWS_AS(ex::advection_diffusion_steady(0.5, 0.0), ConfigError);
}

TEST_CASE("viscous front profile") {
    CHECK(ex::viscous_front(0.5 * 3.0, 3.0, 0.05) == doctest::Approx(0.5));
    CHECK(ex::viscous_front(-100.0, 0.0, 0.05) == doctest::Approx(1.0));
    CHECK(ex::viscous_front(100.0, 0.0, 0.05) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ex::viscous_front(1.7, 3.0, 0.05) == doctest::Approx(0.11920292202211757));
    CHECK_THROWS_AS(ex::viscous_front(0.0, 0.0, 0.0), ConfigError);
}

TEST_CASE("modified bessel I_n against reference values") {
    // Reference values from standard tables.
    CHECK(ex::modified_bessel_i(0, 1.0) == doctest::Approx(1.2660658777520084).epsilon(1e-14));
    CHECK(ex::modified_bessel_i(1, 1.0) == doctest::Approx(0.565159103992485).epsilon(1e-14));
    CHECK(ex::modified_bessel_i(3, 2.5) == doctest::Approx(0.4743704087780359).epsilon(1e-13));
    const double z = 1.0 / (2.0 * M_PI * 0.1);
    CHECK(ex::modified_bessel_i(0, z) == doctest::Approx(1.7408515643314646).epsilon(1e-14));
    CHECK(ex::modified_bessel_i(1, z) == doctest::Approx(1.0757817013653423).epsilon(1e-14));
    CHECK(ex::modified_bessel_i(5, z) == doctest::Approx(0.002953020925129826).epsilon(1e-13));
    CHECK(ex::modified_bessel_i(-1, z) == ex::modified_bessel_i(1, z));
}

TEST_CASE("viscous sine series values and symmetry") {
    const double nu = 0.1, t = 2.55237;
    CHECK(ex::viscous_sine_series(0.0, t, nu) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ex::viscous_sine_series(0.25, t, nu) ==
          doctest::Approx(-0.047543791557417205).epsilon(1e-12));
    CHECK(ex::viscous_sine_series(0.5, t, nu) ==
          doctest::Approx(-0.06253948858195663).epsilon(1e-12));
    CHECK(ex::viscous_sine_series(0.75, t, nu) ==
          doctest::Approx(-0.04133566868411967).epsilon(1e-12));
    for (int k = 0; k < 50; ++k) {
        const double x = test_util::uniform(0.0, 1.0);
        CHECK(ex::viscous_sine_series(-x, t, nu) ==
              doctest::Approx(-ex::viscous_sine_series(x, t, nu)).epsilon(1e-13));
    }
}

TEST_CASE("viscous sine series truncation is converged at the default order") {
    const double nu = 0.1, t = 2.55237;
    for (double x : {-0.8, -0.3, 0.1, 0.45, 0.9}) {
        const double n60 = ex::viscous_sine_series(x, t, nu, 60);
        const double n120 = ex::viscous_sine_series(x, t, nu, 120);
        CHECK(std::abs(n60 - n120) < 1e-10);
    }
}

TEST_CASE("viscous sine series reproduces the initial condition and stays bounded") {
    const double nu = 0.1;
    double last_sign = 0.0;
    int sign_changes = 0;
    for (int j = 0; j < 101; ++j) {
        const double x = -1.0 + 0.02 * j;
        CHECK(ex::viscous_sine_series(x, 0.0, nu, 120) ==
              doctest::Approx(-std::sin(M_PI * x)).epsilon(1e-10));
        const double u = ex::viscous_sine_series(x, 2.55237, nu);
        CHECK(std::abs(u) < 1.0);
        const double s = u > 1e-14 ? 1.0 : (u < -1e-14 ? -1.0 : 0.0);
        if (s != 0.0 && last_sign != 0.0 && s != last_sign) ++sign_changes;
        if (s != 0.0) last_sign = s;
    }
    CHECK(sign_changes == 1);  // single zero crossing at x = 0
}

TEST_CASE("viscous steady shock profile") {
    CHECK(ex::viscous_steady_shock(0.0, 0.1, 1.0, -1.0) == doctest::Approx(0.0));
    CHECK(ex::viscous_steady_shock(50.0, 0.1, 1.0, -1.0) == doctest::Approx(-1.0));
    CHECK(ex::viscous_steady_shock(-50.0, 0.1, 1.0, -1.0) == doctest::Approx(1.0));
    // x (uL-uR)/(4 nu) = 0.2*2/0.4 = 1
    CHECK(ex::viscous_steady_shock(0.2, 0.1, 1.0, -1.0) ==
          doctest::Approx(-std::tanh(1.0)).epsilon(1e-14));
}

TEST_CASE("2d diagonal discontinuity indicator") {
    const double phi = M_PI / 4.0;
    CHECK(ex::lce2d_diagonal(0.2, 0.5, phi) == 1.0);
    CHECK(ex::lce2d_diagonal(0.5, 0.2, phi) == 0.0);
    // boundary set assigned 0 (exercised where b x - a y is exactly zero;
    // sin(pi/4) and cos(pi/4) differ by one ulp, so x = y does not hit it)
    CHECK(ex::lce2d_diagonal(0.0, 0.0, phi) == 0.0);
}

TEST_CASE("2d diagonal viscous front") {
    CHECK(ex::burgers2d_front(0.03, 0.07, 0.1, 0.01) == doctest::Approx(0.5));
    CHECK(ex::burgers2d_front(0.06, 0.06, 0.1, 0.01) ==
          doctest::Approx(0.5 - std::tanh(1.0)).epsilon(1e-14));
    CHECK(ex::burgers2d_front(-10, -10, 0.0, 0.01) == doctest::Approx(1.5));
    CHECK(ex::burgers2d_front(10, 10, 0.0, 0.01) == doctest::Approx(-0.5));
}

TEST_CASE("smooth burgers characteristic solution") {
    const double t = 0.4 / M_PI;
    CHECK(ex::burgers_sine_exact(0.1, t) == doctest::Approx(0.3450427493627193).epsilon(1e-11));
    CHECK(ex::burgers_sine_exact(0.3, t) == doctest::Approx(0.9142202324023656).epsilon(1e-11));
    CHECK(std::abs(ex::burgers_sine_exact(0.5, t)) < 1e-12);
    for (int k = 0; k < 200; ++k) {
        const double x = test_util::uniform(0.0, 1.0);
        const double u = ex::burgers_sine_exact(x, t);
        CHECK(std::abs(u - std::sin(2.0 * M_PI * (x - u * t))) < 1e-12);
        // odd symmetry about x = 1/2
        CHECK(ex::burgers_sine_exact(1.0 - x, t) == doctest::Approx(-u).epsilon(1e-10));
    }
    CHECK(ex::burgers_sine_exact(0.3, 0.0) == doctest::Approx(std::sin(0.6 * M_PI)));
}

// Central-difference residuals of the governing equations on the closed
// forms; the oracles must satisfy their PDEs, not just look plausible.
namespace {

template <typename F>
double burgers_residual_1d(F&& u, double x, double t, double nu, double h) {
    const double ut = (u(x, t + h) - u(x, t - h)) / (2.0 * h);
    const double ux = (u(x + h, t) - u(x - h, t)) / (2.0 * h);
    const double uxx = (u(x + h, t) - 2.0 * u(x, t) + u(x - h, t)) / (h * h);
    return ut + u(x, t) * ux - nu * uxx;
}

}  // namespace

TEST_CASE("viscous oracles satisfy their PDEs") {
    const double h = 1e-4;
    for (double x : {-0.4, 0.0, 0.3, 1.2})
        for (double t : {0.5, 2.0}) {
            const double r = burgers_residual_1d(
                [](double x_, double t_) { return ex::viscous_front(x_, t_, 0.05); }, x, t, 0.05,
                h);
            CHECK(std::abs(r) < 1e-3);
        }
    for (double x : {-0.5, -0.2, 0.3, 0.7})
        for (double t : {1.0, 2.0}) {
            const double r = burgers_residual_1d(
                [](double x_, double t_) { return ex::viscous_sine_series(x_, t_, 0.1, 120); },
                x, t, 0.1, h);
            CHECK(std::abs(r) < 1e-3);
        }
    // steady shock: u u_x = nu u_xx
    for (double x : {-0.2, 0.05, 0.3}) {
        auto u = [](double x_) { return ex::viscous_steady_shock(x_, 0.1, 1.0, -1.0); };
        const double ux = (u(x + h) - u(x - h)) / (2.0 * h);
        const double uxx = (u(x + h) - 2.0 * u(x) + u(x - h)) / (h * h);
        CHECK(std::abs(u(x) * ux - 0.1 * uxx) < 1e-3);
    }
}

TEST_CASE("2d front satisfies the 2d viscous burgers equation") {
    const double nu = 0.01, h = 3e-5;
    auto u = [nu](double x, double y, double t) { return ex::burgers2d_front(x, y, t, nu); };
    for (double s : {-0.01, 0.0, 0.015}) {
        const double x = 0.03 + s, y = 0.05, t = 0.08;
        const double ut = (u(x, y, t + h) - u(x, y, t - h)) / (2.0 * h);
        const double ux = (u(x + h, y, t) - u(x - h, y, t)) / (2.0 * h);
        const double uy = (u(x, y + h, t) - u(x, y - h, t)) / (2.0 * h);
        const double uxx = (u(x + h, y, t) - 2.0 * u(x, y, t) + u(x - h, y, t)) / (h * h);
        const double uyy = (u(x, y + h, t) - 2.0 * u(x, y, t) + u(x, y - h, t)) / (h * h);
        const double r = ut + u(x, y, t) * (ux + uy) - nu * (uxx + uyy);
        CHECK(std::abs(r) < 1e-3);
    }
}

#pragma once

#include <cmath>
#include <functional>

#include "kfds/common.hpp"

namespace kfds {

/// Scalar conservation law u_t + g(u)_x [+ g2(u)_y] = nu * Laplacian(u).
/// a must be the exact derivative of g (checked by tests against central
/// differences); nu >= 0.
struct FluxModel {
    std::function<double(double)> g;
    std::function<double(double)> a;
    double nu = 0.0;
    // Second direction for 2D problems; unset for 1D.
    std::function<double(double)> g2;
    std::function<double(double)> a2;

    bool has_second_flux() const { return static_cast<bool>(g2); }
};

inline FluxModel linear_advection_model(double speed, double nu = 0.0) {
    FluxModel m;
    m.g = [speed](double u) { return speed * u; };
    m.a = [speed](double) { return speed; };
    m.nu = nu;
    return m;
}

inline FluxModel burgers_model(double nu = 0.0) {
    FluxModel m;
    m.g = [](double u) { return 0.5 * u * u; };
    m.a = [](double u) { return u; };
    m.nu = nu;
    return m;
}

/// 2D linear advection with velocity (ax, ay).
inline FluxModel linear_advection_model_2d(double ax, double ay, double nu = 0.0) {
    FluxModel m = linear_advection_model(ax, nu);
    m.g2 = [ay](double u) { return ay * u; };
    m.a2 = [ay](double) { return ay; };
    return m;
}

/// 2D Burgers: g1 = g2 = u^2/2.
inline FluxModel burgers_model_2d(double nu = 0.0) {
    FluxModel m = burgers_model(nu);
    m.g2 = m.g;
    m.a2 = m.a;
    return m;
}

/// Burgers flux in x, unit-speed linear convection in y; the y coordinate
/// plays the role of time for the steady solution.
inline FluxModel burgers_linear_model(double nu = 0.0) {
    FluxModel m = burgers_model(nu);
    m.g2 = [](double u) { return u; };
    m.a2 = [](double) { return 1.0; };
    return m;
}

}  // namespace kfds

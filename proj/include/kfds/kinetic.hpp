#pragma once

#include <array>

#include "kfds/common.hpp"

namespace kfds {

// Two-velocity discrete distribution (velocities +lambda, -lambda). The
// kinetic layer is used for construction and moment-identity tests; the
// production flux kernels are purely macroscopic.
struct KineticPair {
    double f_plus = 0.0;
    double f_minus = 0.0;
};

// Four-velocity distribution for the 2D model, components ordered by the
// velocity signs (-,-), (+,-), (+,+), (-,+) in (x, y).
struct KineticQuad {
    std::array<double, 4> f{};
};

struct Moments1D {
    double density = 0.0;        // P f
    double flux = 0.0;           // P Lambda f
    double second_moment = 0.0;  // P Lambda^2 f
};

/// f_eq = (u/2 + g/(2 lambda), u/2 - g/(2 lambda)); moments recover (u, g).
inline KineticPair equilibrium_1d(double u, double g, double lambda) {
    if (!(lambda > 0.0)) throw StateError("equilibrium_1d: wave speed must be positive");
    const double half_u = 0.5 * u;
    const double q = g / (2.0 * lambda);
    return {half_u + q, half_u - q};
}

inline Moments1D moments_1d(const KineticPair& f, double lambda) {
    Moments1D m;
    m.density = f.f_plus + f.f_minus;
    m.flux = lambda * f.f_plus - lambda * f.f_minus;
    m.second_moment = lambda * lambda * f.f_plus + lambda * lambda * f.f_minus;
    return m;
}

/// Split fluxes g+- = g/2 +- lambda u / 2; their sum is g.
inline std::array<double, 2> split_macroscopic_flux(double u, double g, double lambda) {
    if (!(lambda > 0.0)) throw StateError("split_macroscopic_flux: wave speed must be positive");
    const double half_g = 0.5 * g;
    const double half_lu = 0.5 * lambda * u;
    return {half_g + half_lu, half_g - half_lu};
}

struct ViscousComponent {
    KineticPair f_v;            // (q, -q) with q = nu u_x / (2 lambda)
    double density_moment = 0.0;   // P f_v, identically zero
    double flux_moment = 0.0;      // P Lambda f_v = g_v = nu u_x
    double second_moment = 0.0;    // P Lambda^2 f_v, identically zero
    double plus_moment = 0.0;      // P Lambda+ f_v = g_v / 2
    double minus_moment = 0.0;     // P Lambda- f_v = g_v / 2
};

/// Viscous part of the discrete Chapman-Enskog distribution. The zero
/// moments are exact in floating point: the two components are (q, -q).
inline ViscousComponent chapman_enskog_viscous(double nu, double du_dx, double lambda) {
    if (!(lambda > 0.0)) throw StateError("chapman_enskog_viscous: wave speed must be positive");
    const double q = 0.5 * nu * du_dx / lambda;
    ViscousComponent v;
    v.f_v = {q, -q};
    v.density_moment = v.f_v.f_plus + v.f_v.f_minus;
    v.flux_moment = lambda * v.f_v.f_plus - lambda * v.f_v.f_minus;
    v.second_moment = lambda * lambda * v.f_v.f_plus + lambda * lambda * v.f_v.f_minus;
    v.plus_moment = lambda * v.f_v.f_plus;
    v.minus_moment = -lambda * v.f_v.f_minus;
    return v;
}

/// Four-velocity equilibrium: f_k = u/4 with signs (-,-),(+,-),(+,+),(-,+)
/// on G1/(4 lambda) and G2/(4 lambda).
inline KineticQuad equilibrium_2d(double u, double g1, double g2, double lambda) {
    if (!(lambda > 0.0)) throw StateError("equilibrium_2d: wave speed must be positive");
    const double qu = 0.25 * u;
    const double q1 = g1 / (4.0 * lambda);
    const double q2 = g2 / (4.0 * lambda);
    KineticQuad f;
    f.f[0] = qu - q1 - q2;
    f.f[1] = qu + q1 - q2;
    f.f[2] = qu + q1 + q2;
    f.f[3] = qu - q1 + q2;
    return f;
}

struct Moments2D {
    double density = 0.0;  // sum f_k
    double flux_x = 0.0;   // P Lambda1 f
    double flux_y = 0.0;   // P Lambda2 f
};

inline Moments2D moments_2d(const KineticQuad& f, double lambda) {
    Moments2D m;
    m.density = f.f[0] + f.f[1] + f.f[2] + f.f[3];
    m.flux_x = lambda * (-f.f[0] + f.f[1] + f.f[2] - f.f[3]);
    m.flux_y = lambda * (-f.f[0] - f.f[1] + f.f[2] + f.f[3]);
    return m;
}

}  // namespace kfds

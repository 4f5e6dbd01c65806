#include "kfds/exact.hpp"

#include <cmath>

namespace kfds::exact {

double riemann_burgers(double u_left, double u_right, double x, double t) {
    if (t <= 0.0) return x < 0.0 ? u_left : u_right;
    if (u_left > u_right) {
        const double s = 0.5 * (u_left + u_right);
        return x < s * t ? u_left : u_right;
    }
    if (u_left < u_right) {
        const double xi = x / t;
        if (xi <= u_left) return u_left;
        if (xi >= u_right) return u_right;
        return xi;
    }
    return u_left;
}

double linear_advection_profile(double x, double t) {
    const double third = 1.0 / 3.0;
    if (x < -third + t) return 0.0;
    if (x <= third + t) return 1.0;
    return -1.0;
}

double advection_diffusion_steady(double x, double peclet) {
    if (peclet == 0.0) throw ConfigError("advection_diffusion_steady: Pe must be nonzero");
    if (peclet > 0.0) {
        // (1 - e^{x Pe})/(1 - e^{Pe}) scaled by e^{-Pe}; both exponents <= 0
        // for x in [0, 1], so arbitrarily stiff layers evaluate cleanly.
        return (std::exp(-peclet) - std::exp((x - 1.0) * peclet)) / (std::exp(-peclet) - 1.0);
    }
    return (1.0 - std::exp(x * peclet)) / (1.0 - std::exp(peclet));
}

double viscous_front(double x, double t, double nu) {
    if (!(nu > 0.0)) throw ConfigError("viscous_front: nu must be positive");
    return 1.0 - 0.5 * (1.0 - std::tanh((0.5 * t - x) / (4.0 * nu)));
}

double modified_bessel_i(int order, double x) {
    if (order < 0) order = -order;  // I_{-n} = I_n
    const double half = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= order; ++k) term *= half / k;  // (x/2)^n / n!
    double sum = term;
    const double half2 = half * half;
    for (int m = 1; m <= 400; ++m) {
        term *= half2 / (static_cast<double>(m) * (m + order));
        sum += term;
        if (term < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double viscous_sine_series(double x, double t, double nu, int n_terms) {
    if (!(nu > 0.0)) throw ConfigError("viscous_sine_series: nu must be positive");
    if (n_terms < 1) throw ConfigError("viscous_sine_series: need at least one term");
    const double z = 1.0 / (2.0 * M_PI * nu);
    double num = 0.0;
    double den = modified_bessel_i(0, z);
    for (int n = 1; n <= n_terms; ++n) {
        const double a_n = (n % 2 == 0 ? 1.0 : -1.0) * modified_bessel_i(n, z);
        const double decay = std::exp(-nu * n * n * M_PI * M_PI * t);
        num += n * a_n * decay * std::sin(n * M_PI * x);
        den += 2.0 * a_n * decay * std::cos(n * M_PI * x);
    }
    if (std::abs(den) < 1e-300)
        throw StateError("viscous_sine_series: series denominator underflow");
    return 4.0 * M_PI * nu * num / den;
}

double viscous_steady_shock(double x, double nu, double u_left, double u_right) {
    if (!(nu > 0.0)) throw ConfigError("viscous_steady_shock: nu must be positive");
    const double jump = u_left - u_right;
    return 0.5 * ((u_left + u_right) - jump * std::tanh(x * jump / (4.0 * nu)));
}

double lce2d_diagonal(double x, double y, double angle) {
    const double a = std::cos(angle), b = std::sin(angle);
    return b * x - a * y < 0.0 ? 1.0 : 0.0;
}

double burgers2d_front(double x, double y, double t, double nu) {
    if (!(nu > 0.0)) throw ConfigError("burgers2d_front: nu must be positive");
    return 0.5 - std::tanh((x + y - t) / (2.0 * nu));
}

double burgers_sine_exact(double x, double t) {
    if (t <= 0.0) return std::sin(2.0 * M_PI * x);
    auto f = [&](double u) { return u - std::sin(2.0 * M_PI * (x - u * t)); };
    // f is increasing in u for t < 1/(2 pi); bracket the unique root.
    double lo = -1.0, hi = 1.0;
    double flo = f(lo), fhi = f(hi);
    // Widen defensively in case of rounding at the extremes.
    while (flo > 0.0) { lo -= 0.5; flo = f(lo); }
    while (fhi < 0.0) { hi += 0.5; fhi = f(hi); }
    double u = std::sin(2.0 * M_PI * x);  // characteristic foot guess
    if (u < lo || u > hi) u = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fu = f(u);
        if (fu > 0.0) hi = u; else lo = u;
        const double dfu = 1.0 + 2.0 * M_PI * t * std::cos(2.0 * M_PI * (x - u * t));
        double next = u - fu / dfu;
        if (!(dfu > 0.0) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
        if (std::abs(next - u) < 1e-13 && std::abs(fu) < 1e-13) return next;
        u = next;
    }
    return u;
}

}  // namespace kfds::exact

#pragma once

#include "kfds/common.hpp"

namespace kfds::exact {

/// Riemann solution for inviscid Burgers: shock of speed (uL+uR)/2 when
/// uL > uR, centered fan u = x/t when uL < uR. t <= 0 returns the initial
/// step.
double riemann_burgers(double u_left, double u_right, double x, double t);

/// Three-state step 0 / 1 / -1 with both jumps translated by t (unit speed).
double linear_advection_profile(double x, double t);

/// Steady boundary-layer profile (1 - e^{x Pe}) / (1 - e^{Pe}), rearranged
/// so large positive Pe cannot overflow.
double advection_diffusion_steady(double x, double peclet);

/// Traveling viscous front 1 - (1 - tanh((t/2 - x)/(4 nu)))/2.
double viscous_front(double x, double t, double nu);

/// Modified Bessel function of the first kind, integer order, by power
/// series (adequate for the argument range 1/(2 pi nu) used here).
double modified_bessel_i(int order, double x);

/// Fourier-Bessel solution of viscous Burgers with u(x,0) = -sin(pi x) on
/// [-1, 1], truncated at n_terms.
double viscous_sine_series(double x, double t, double nu, int n_terms = 60);

/// Steady viscous shock ((uL+uR) - (uL-uR) tanh(x (uL-uR)/(4 nu))) / 2.
double viscous_steady_shock(double x, double nu, double u_left, double u_right);

/// Steady diagonal discontinuity for 2D linear advection at angle phi
/// (radians): 1 where x sin(phi) - y cos(phi) < 0, else 0.
double lce2d_diagonal(double x, double y, double angle);

/// Diagonal viscous front 0.5 - tanh((x + y - t)/(2 nu)).
double burgers2d_front(double x, double y, double t, double nu);

/// Smooth Burgers solution with u(x,0) = sin(2 pi x): solves the
/// characteristic equation u = sin(2 pi (x - u t)) by safeguarded Newton
/// (tolerance 1e-13, bisection fallback). Valid before shock formation
/// (t < 1/(2 pi)).
double burgers_sine_exact(double x, double t);

}  // namespace kfds::exact

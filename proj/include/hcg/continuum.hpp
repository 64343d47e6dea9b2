#pragma once

#include "hcg/geometry.hpp"

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace hcg {

struct WaveField {
    Eigen::VectorXd X;   // X_J
    Eigen::VectorXd V;   // X_J'
    double density = 1.0;          // mu / dx
    double youngs_modulus = 1.0;   // mu w^2 dx
    double wave_speed = 1.0;       // w dx

    static WaveField make(const Eigen::VectorXd& X, const Eigen::VectorXd& V, const ChainGeometry& g);
};

// One velocity-Verlet step of X_J'' = (w/d)^2 (X_{J+1} - 2 X_J + X_{J-1}), periodic.
// (w/d) dt > 1 is refused.
WaveField lattice_wave_step(const WaveField& f, double dt, const ChainGeometry& g, long d);

// 1/2 |V|^2 + 1/2 (w/d)^2 sum (X_{J+1} - X_J)^2
double lattice_energy(const WaveField& f, const ChainGeometry& g, long d);
// Quadratic invariant of the Verlet map: the kinetic part carries 1/(1 - dt^2 W^2/4) per mode
double lattice_shadow_energy(const WaveField& f, double dt, const ChainGeometry& g, long d);

// Spectral solution of sigma X_tt = Y X_xx on a periodic domain sampled at
// equally spaced points. k = 0 drifts with the mean velocity.
Eigen::VectorXd continuum_solution(const Eigen::VectorXd& X0, const Eigen::VectorXd& V0, double t,
                                   double wave_speed, double period_length);

struct DispersionMeasurement {
    double measured = 0.0;       // from cos(W dt) = (X_{n+1} + X_{n-1}) / (2 X_n)
    double lattice = 0.0;        // 2 (w/d) sin(pi L/M)
    double scheme = 0.0;         // (2/dt) asin(lattice dt / 2)
    double exact_chain = 0.0;    // 2 w sin(pi L/(M d))
    double scheme_error = 0.0;   // |measured - scheme| / scheme
    double chain_error = 0.0;    // |measured - exact_chain| / exact_chain
    double chain_bound = 0.0;    // (pi L/M)^2/6 + (lattice dt)^2/24, leading terms
};
DispersionMeasurement measure_dispersion(long L, const ChainGeometry& g, long d, double dt, long steps = 64);

enum class ConvergenceRoute {
    chain,     // group averages of the exact fine chain, d = N
    lattice    // exact modal solution of the nearest-neighbour equation
};

struct ConvergenceRow {
    long groups = 0;
    double sup_error = 0.0;
};
struct ConvergenceTable {
    long L = 0;
    long group_size = 0;
    ConvergenceRoute route = ConvergenceRoute::chain;
    std::vector<ConvergenceRow> rows;
    double fitted_slope = 0.0;
};

// Travelling wave cos(2 pi L j/script N - w_L t) on the fine chain, coarse
// grained with d = N, against the continuum evolution of the same initial
// group data after one continuum period script N / (L w).
ConvergenceTable convergence_study(long L, const std::vector<long>& groups, long group_size,
                                   ConvergenceRoute route = ConvergenceRoute::chain);

// least-squares slope of log y against log x
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace hcg

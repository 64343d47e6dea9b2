#pragma once

#include "hcg/noise.hpp"

namespace hcg {

// K_I(t,t') in units N kT mu w^2 / (4 hbar^2):
//   sum_k |a_k|^2 [cos(nu t) cos(nu t') + sin(nu t) sin(nu t')] / nu_k^2
double kernel(double t, double tp, const LagrangianCoefficients& k);
double kernel(double t, double tp, const BlockSystem& b, const SpectralData& s);

// N kT mu w^2 / (4 hbar^2) for a geometry
double kernel_unit(const ChainGeometry& g);

// Time-averaged trace per mode. K_I(t,t) does not depend on t, and
// Omega^{-2} = M^{1/2} V^{-1} M^{1/2} reduces it to (W u)^dagger V^{-1} (W u).
double trace_measure(const BlockSystem& b);
double trace_measure(long L, long d, long groups);

struct DecoherenceReport {
    long L = 0, d = 1;
    double kernel_trace = 0.0;     // units N kT mu w^2 / (4 hbar^2)
    double classical_ratio = 0.0;  // kernel_trace / S^2, both in their own units
    double t_dyn = 0.0;
    double t_decoh = 0.0;
    double ratio_decoh_dyn = 0.0;
    double lambda_DB = 0.0;
    double F_noise = 0.0;
    double F_dyn = 0.0;
    double noise_force_ratio = 0.0;
    double thermal_scale = 0.0;    // L_T
    double op_count = 0.0;         // N_S for the given horizon
    bool order_of_magnitude = true;
};

// Order-of-magnitude estimates; every "~" is evaluated with unit prefactor.
// Mode-level quantities (kernel_trace, classical_ratio) are computed when
// d <= mode_limit, otherwise left at zero.
DecoherenceReport predictability_report(const ChainGeometry& g, const CoarseGrainingSpec& spec, long L, long d,
                                        double excitation_scale, double horizon = 1.0,
                                        long mode_limit = 1L << 22);

} // namespace hcg

#pragma once

#include "hcg/spectral.hpp"

#include <random>
#include <utility>
#include <vector>

namespace hcg {

enum class NoiseForm { simple, lagrangian };

struct NoiseRealization {
    Eigen::VectorXcd dq;      // Delta q(0)
    Eigen::VectorXcd dqdot;   // Delta q-dot(0)
    NoiseForm form = NoiseForm::simple;
};

// Conditional thermal draw: Delta q ~ CN(0, kT V_TT^{-1}), Delta q-dot ~ CN(0, kT M_TT^{-1}).
// Uses z ~ CN(0, A) (diagonal part plus one scalar along g) and x = A^{-1} z.
NoiseRealization draw_thermal(const BlockSystem& b, double kT, std::mt19937_64& rng);

// Delta f_L(t) = c W (cos(W_Q t) dq + W_Q^{-1} sin(W_Q t) dqdot), W = Omega_L^2 - Omega_Q^2
cd noise_simple(double t, const NoiseRealization& r, const BlockSystem& b);

// Spectral pieces of the Lagrangian form:
//   a_k = v_k^dagger M^{-1/2} W u, so that c W M^{-1/2} v_k = conj(a_k),
//   K = mu / (|c0|^2 + |c|^2) (the constant N mu once units are restored)
struct LagrangianCoefficients {
    Eigen::VectorXcd a;
    Eigen::VectorXd nu;
    double K = 1.0;
};
LagrangianCoefficients lagrangian_coefficients(const BlockSystem& b, const SpectralData& s);

// Delta f'_L(t) = K c W M^{-1/2} (cos(Omega t) M^{1/2} dq + Omega^{-1} sin(Omega t) M^{1/2} dqdot)
cd noise_lagrangian(double t, const NoiseRealization& r, const BlockSystem& b, const SpectralData& s);

// Precomputed evaluator for many times with one realization.
class LagrangianNoise {
public:
    LagrangianNoise(const BlockSystem& b, const SpectralData& s, const NoiseRealization& r);
    cd operator()(double t) const;

private:
    LagrangianCoefficients k_;
    Eigen::VectorXcd p_, pdot_;
};

// kT (W u cos)^dagger V^{-1} (W u cos') + kT (W u sin/w)^dagger M^{-1} (W u sin'/w)
double corr_simple(double t, double tp, const BlockSystem& b, double kT);

// K^2 kT sum_k |a_k|^2 cos(nu_k (t - t')) / nu_k^2
double corr_lagrangian(double t, double tp, const BlockSystem& b, const SpectralData& s, double kT);
double corr_lagrangian(double t, double tp, const LagrangianCoefficients& k, double kT);

enum class TimeAverage {
    as_written,    // diagonal terms only, exact initial-condition factor
    unit_factor,   // initial-condition factor replaced by 1
    exact          // cross terms between exactly degenerate modes kept
};

// S^2 in units kT w^2 / (N mu)
struct NoiseSpectrum {
    long L = 0, d = 1;
    double S2 = 0.0;
    std::vector<double> per_mode;
};
NoiseSpectrum noise_strength(long L, long d, long groups, TimeAverage mode = TimeAverage::as_written);

// ((pi L/M)^2, (pi L/M)^2 / d)
std::pair<double, double> asymptotic_estimates(long L, long d, long groups);

} // namespace hcg

#pragma once

#include "hcg/noise.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace hcg {

struct InitialCondition {
    long cutoff = 0;                                   // l_C
    std::map<long, std::pair<cd, cd>> excited_means;   // l -> (a_bar, pi_bar), l < l_C
    double temperature = 1.0;                          // k_B comes from the geometry
    std::uint64_t seed = 0;

    void validate(const ChainGeometry& g) const;
};

// Fine-mode phase-space point, indexed l = 0 .. script N / 2
struct PhaseSpacePoint {
    Eigen::VectorXcd a, pi;
};

// Thermal draw around the means. Interior modes: real and imaginary parts
// independent with E|a - a_bar|^2 = kT/(mu w^2) and E|pi - pi_bar|^2 = mu kT,
// so the mean of H_l = (|pi|^2/mu + mu w^2 |a|^2)/2 is kT. Self-conjugate
// modes (l = script N/2) are real, each contributing 2 mu w^2 a^2 + 2 pi^2/mu,
// hence variances kT/(4 mu w^2) and mu kT/4. The zero mode has no
// normalisable amplitude distribution: a_0 stays at its mean, pi_0 is thermal.
PhaseSpacePoint sample_initial(const InitialCondition& ic, const ChainGeometry& g, std::mt19937_64& rng);
PhaseSpacePoint sample_initial(const InitialCondition& ic, const ChainGeometry& g);

PhaseSpacePoint evolve_exact(const PhaseSpacePoint& p, double t, const ChainGeometry& g);
double mode_energy(const PhaseSpacePoint& p, long l, const ChainGeometry& g);

// E[f(t) | A_L(0), A_L'(0)] for f = A'' + Omega_L^2 A, with the conditional
// Gaussian algebra done over the real and imaginary parts of the fine modes
// that enter A_L. With thermal statistics, f - F_L has covariance corr_simple / N.
class ConditionalForce {
public:
    ConditionalForce(const ChainGeometry& g, long L, const InitialCondition& ic);

    struct Gain {
        double t = 0.0;
        cd offset;                           // F(t) mu_y - K(t) H mu_y
        Eigen::Matrix<double, 2, Eigen::Dynamic> K;   // acts on (Re A, Im A, Re A', Im A')
        double residual_variance = 0.0;      // E|f - F_L|^2
    };
    Gain gain(double t) const;
    cd apply(const Gain& gn, cd A0, cd Adot0) const;

    cd coarse(const PhaseSpacePoint& p) const;        // A_L
    cd coarse_rate(const PhaseSpacePoint& p) const;   // A_L'
    cd drive(const PhaseSpacePoint& p) const;         // A'' + Omega^2 A, exact
    double frequency() const { return Omega_; }
    long mode() const { return L_; }
    const std::vector<ProjectionTerm>& terms() const { return terms_; }

private:
    ChainGeometry g_;
    long L_;
    double Omega_;
    std::vector<ProjectionTerm> terms_;
    std::vector<long> modes_;          // distinct fine modes, column blocks of 4
    Eigen::VectorXd mean_, var_;
    Eigen::Matrix<double, 4, Eigen::Dynamic> H_;

    Eigen::Matrix<double, 2, Eigen::Dynamic> force_map(double t) const;
};

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<PhaseSpacePoint> fine;
    std::vector<Eigen::VectorXcd> coarse;      // A_L, L = 0 .. M/2, from the projection terms
    std::vector<Eigen::VectorXcd> coarse_atoms;// same via atoms -> group averages -> modes
    std::vector<Eigen::VectorXd> groups;       // X_J
    double route_mismatch = 0.0;
};

TrajectoryRecord coarse_trajectory(const PhaseSpacePoint& initial, const std::vector<double>& times,
                                   const ChainGeometry& g, bool atom_route = true);

// E_L(t) = A'' + Omega_L^2 A - F_L with A'' taken from the mode solution
std::vector<cd> residual(const TrajectoryRecord& rec, const ConditionalForce& force);

// A'' + Omega^2 A = force(t) on a uniform grid: exact rotation for the
// oscillator, exact response to the piecewise-linear interpolant of the force.
// omega_max * step > 0.5 is refused.
std::vector<cd> langevin_evolve(double Omega, cd A0, cd Adot0, const std::vector<double>& times,
                                const std::vector<cd>& force, double omega_max);

enum class NoiseRoute { simple, transformed };
struct TransformKernel;

// Physical Delta f_L on the grid for one conditional thermal draw. The
// transformed route evaluates Delta f' and inverts the trapezoid Volterra
// operator; `volterra` may carry a kernel prebuilt on omega * times.
std::vector<cd> noise_on_grid(NoiseRoute route, const BlockSystem& b, const SpectralData& s, const ChainGeometry& g,
                              const std::vector<double>& times, std::mt19937_64& rng,
                              const TransformKernel* volterra = nullptr);

struct EnsembleConfig {
    ChainGeometry geometry = ChainGeometry::natural(16, 8, 8);
    long L = 2;
    InitialCondition ic;
    long samples = 10000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::vector<double> lags{0.0, pi, 2.0 * pi};
    double langevin_time = 5.0;
    double langevin_step = 0.05;
    bool langevin = true;
    bool transformed = true;
    double sigma_threshold = 3.0;
};

struct Statistic {
    std::string observable;
    double t = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double standard_error = 0.0;
    double expected = 0.0;
    bool checked = false;
    bool pass = true;
};

struct EnsembleSummary {
    std::vector<Statistic> stats;
    double energy_drift = 0.0;          // max relative per-mode energy error
    double max_abs_residual = 0.0;      // for d = 1 runs
    double force_to_noise = 0.0;        // |mean F_L| / noise sd, worst over grid
    bool undersampled = false;
    bool all_pass() const;
};

EnsembleSummary run_ensemble(const EnsembleConfig& cfg);
void write_ensemble_csv(std::ostream& os, const EnsembleConfig& cfg, const EnsembleSummary& s,
                        const std::vector<std::string>& header);

} // namespace hcg

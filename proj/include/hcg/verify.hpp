#pragma once

#include "hcg/noise.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hcg {

struct CheckItem {
    std::string identity;
    long L = 0, d = 0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool inconclusive = false;
    std::string note;
};

struct VerifyReport {
    std::vector<CheckItem> items;
    bool all_pass() const;
    double max_residual(const std::string& identity) const;
    void add(CheckItem item) { items.push_back(std::move(item)); }
    void merge(const VerifyReport& other);
};

// Block equalities against dense products and solves, and the reduced constant.
// `corruption` scales c_1 before anything is built (fault injection).
VerifyReport check_appendix_b(long L, long d, long groups, double tol = 1e-10, double corruption = 0.0);

// Delta f' = C (Delta f + int_0^t G(t - t') Delta f(t') dt'),
//   G(tau) = -(mu/|c0|^2) sum_k conj(a_k) b_k sin(nu_k tau) / nu_k,
//   a_k = v_k^dagger M^{-1/2} W u,  b_k = v_k^dagger M^{-1/2} u
struct TransformKernel {
    double C = 1.0;                 // mu / sum |c|^2; N mu in physical units
    Eigen::VectorXd nu;
    Eigen::VectorXcd g;             // -(mu/|c0|^2) conj(a_k) b_k
    std::vector<double> times;      // uniform, starting at 0
    Eigen::MatrixXd G;              // G(t_i - t_j), lower triangle, zero diagonal
    double max_imag = 0.0;          // largest |Im G| seen while sampling

    double operator()(double tau) const;
    double step() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
    // trapezoid discretisation of (I + G): unit lower triangular
    Eigen::MatrixXd volterra_matrix() const;
    // (I + G_h) y = x for y by forward substitution
    Eigen::VectorXcd solve(const Eigen::VectorXcd& rhs) const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
};

TransformKernel build_transform(const BlockSystem& b, const SpectralData& s, const std::vector<double>& times);
std::vector<double> uniform_grid(double t_end, long steps);

// Closed-form C (Delta f + int G Delta f) at time t for a realization.
cd transformed_noise_closed_form(double t, const TransformKernel& k, const NoiseRealization& r, const BlockSystem& b);

struct EquivalenceResult {
    double closed_form_residual = 0.0;            // sup |lhs - rhs| / sup |rhs|
    std::vector<double> quadrature_residual;      // h, h/2, h/4
    std::vector<double> observed_order;
};
EquivalenceResult check_noise_equivalence(const BlockSystem& b, const SpectralData& s, const NoiseRealization& r,
                                          const std::vector<double>& times);

// Rank-one resolvent identities: one per environment mode a, one per eigenvalue k, with the given Delta q(0)
VerifyReport check_c11(const BlockSystem& b, const SpectralData& s, const Eigen::VectorXcd& dq, double tol = 1e-10);
// Eigenvector relations for the secular modes and M u = mu (1 + |u|^2/|c0|^2) u
VerifyReport check_eigen_relations(const BlockSystem& b, const SpectralData& s, double tol = 1e-10);

// A(t) = sum_i amp_i cos(freq_i t + phase_i)
struct SmoothTrajectory {
    std::vector<double> amplitude, frequency, phase;
    double value(double t) const;
    double acceleration(double t) const;
};

struct QuadraticFormResult {
    double simple = 0.0;        // E^T corr^+ E on the range of corr
    double transformed = 0.0;   // E'^T (T corr T^T)^+ E'
    double relative_difference = 0.0;
    double cutoff = 1e-10;
    long rank = 0;
    double out_of_range = 0.0;  // |E - P E| / |E|
    bool inconclusive = false;  // cutoffs 1e-10 and 1e-12 disagree
    // |T_h corr_h T_h^T - corr'| / |corr'| at h, h/2, h/4 and the orders
    std::vector<double> kernel_error;
    std::vector<double> kernel_order;
};
QuadraticFormResult check_quadratic_form_equality(const BlockSystem& b, const SpectralData& s,
                                                  const Eigen::VectorXd& residual, const std::vector<double>& times,
                                                  double kT = 1.0, bool refine = true);
QuadraticFormResult check_quadratic_form_equality(const BlockSystem& b, const SpectralData& s,
                                                  const SmoothTrajectory& A, const std::vector<double>& times,
                                                  double kT = 1.0, bool refine = true);

struct SuiteOptions {
    long groups_b = 630;
    std::vector<long> L_b{1, 30, 315};
    std::vector<long> d_b{2, 3, 8, 64, 512};
    long groups_c = 16;
    std::vector<long> L_c{1, 2, 4};
    std::vector<long> d_c{2, 4, 8};
    long realizations = 100;
    std::uint64_t seed = 1;
    double corruption = 0.0;
    unsigned workers = 1;
    bool appendix_b = true;
    bool appendix_c = true;
};
VerifyReport run_verification_suite(const SuiteOptions& opt);

} // namespace hcg

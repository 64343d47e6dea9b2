#pragma once

#include "hcg/block_matrices.hpp"

#include <Eigen/Dense>
#include <vector>

namespace hcg {

enum class SpectralRoute { automatic, dense, secular };

// Eigenpairs (nu_k^2, v_k) of Omega^2 = M_TT^{-1/2} V_TT M_TT^{-1/2}.
//
// The dense route diagonalises the formed matrix. The secular route uses
// V w = nu^2 M w with M, V diagonal plus the same rank-one direction u:
// (D - nu^2) w is parallel to u, so every eigenvalue not pinned by deflation
// is a root of
//     sum_i z_i / (P_i - lambda) = kappa / (lambda - w_0^2)
// over the distinct poles P_i = w_b^2. Roots are located relative to the
// nearest pole, with pole gaps computed from the integer index map.
class SpectralData {
public:
    SpectralRoute route = SpectralRoute::dense;
    Eigen::VectorXd nu2;   // ascending

    long size() const { return nu2.size(); }
    // v_k^dagger M^{-1/2} x and v_k^dagger M^{+1/2} x for all k
    Eigen::VectorXcd project_inv_sqrt(const Eigen::VectorXcd& x) const;
    Eigen::VectorXcd project_sqrt(const Eigen::VectorXcd& x) const;
    Eigen::VectorXcd eigenvector(long k) const;
    Eigen::MatrixXcd eigenvectors() const;

private:
    friend SpectralData effective_frequency(const BlockSystem&, SpectralRoute);

    DiagRankOne msqrt_, minvsqrt_, mass_;
    Eigen::MatrixXcd vectors_;   // dense route

    // secular route: generalized eigenvectors w_k (w^dagger M w = 1)
    struct Implicit {
        bool secular = false;
        // secular root: w_b = u_b (lambda - w0^2) / (P_b - lambda), scaled
        long origin = -1;        // anchor index, -1 = w_0^2
        double delta = 0.0;      // lambda - P_origin
        double scale = 0.0;
        // deflated vector: explicit support
        std::vector<long> idx;
        std::vector<cd> val;
    };
    std::vector<Implicit> implicit_;
    Eigen::VectorXcd u_;
    std::vector<long> pole_m_;     // distinct pole index per anchor (anchor i>=0)
    std::vector<long> group_of_;   // environment index -> anchor, or -1 for the w_0 group
    long m0_ = 0, md_ = 1;
    double omega0sq_ = 0.0;

    Eigen::VectorXcd generalized(long k) const;
};

SpectralData effective_frequency(const BlockSystem& b, SpectralRoute route = SpectralRoute::automatic);

// explicitly formed Omega^2
Eigen::MatrixXcd effective_frequency_matrix(const BlockSystem& b);

// 4 sin^2(pi ma/(M d)) - 4 sin^2(pi mb/(M d)) without cancellation
double pole_gap(long ma, long mb, long md);

} // namespace hcg

#pragma once

#include "hcg/chain_model.hpp"
#include "hcg/structured.hpp"

#include <Eigen/Dense>
#include <vector>

namespace hcg {

// S, T of the system/environment split. T has first row -c_b/c_0 and the
// identity below; for d = 1 the environment is empty.
struct Selection {
    Eigen::VectorXcd S;
    Eigen::MatrixXcd T;
    bool empty_environment() const { return T.cols() == 0; }
};
Selection build_selection(const ModeBasis& basis);

// Blocks for one coarse mode, stored in diagonal-plus-rank-one form. With the
// Hermitian products X^dagger mu Y, u = conj(c) is the rank-one direction:
//   M_TT = mu (I + u u^dagger / |c0|^2),  V_TT = mu diag(w_b^2) + mu w_0^2 u u^dagger / |c0|^2
struct BlockSystem {
    long L = 0, d = 1, groups = 0;
    double mu = 1.0;
    cd c0;
    Eigen::VectorXcd c;        // c_b, b = 1..d-1
    Eigen::VectorXd omega;     // w_b
    Eigen::VectorXd theta;     // w_b = 2 sin(theta_b)
    std::vector<long> m;       // index map of the environment modes
    double omega0 = 0.0, theta0 = 0.0;
    double M_SS = 0.0, V_SS = 0.0;
    Eigen::RowVectorXcd M_ST, V_ST;
    DiagRankOne M_TT, V_TT;

    long env_size() const { return d - 1; }
    Eigen::VectorXcd u() const { return c.conjugate(); }
    // Omega_L^2 - w_b^2
    Eigen::VectorXd weights() const;
    double coefficient_norm() const;   // |c0|^2 + sum |c_b|^2
};

BlockSystem build_blocks(const ModeBasis& basis, double mass = 1.0);

// Dense reference blocks built by explicit products with S and T.
struct DenseBlocks {
    cd M_SS, V_SS;
    Eigen::RowVectorXcd M_ST, V_ST;
    Eigen::MatrixXcd M_TT, V_TT;
};
DenseBlocks dense_blocks(const ModeBasis& basis, double mass = 1.0);

struct ReducedForms {
    double kinetic = 0.0;
    double potential = 0.0;
    Eigen::RowVectorXcd coupling;
};
ReducedForms reduced_forms(const BlockSystem& b);

// M_TT^{+1/2} and M_TT^{-1/2} in closed form
DiagRankOne mass_sqrt(const BlockSystem& b);
DiagRankOne mass_inv_sqrt(const BlockSystem& b);

} // namespace hcg

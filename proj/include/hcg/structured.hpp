#pragma once

#include "hcg/geometry.hpp"

#include <Eigen/Dense>

namespace hcg {

// diag(D) + sigma g g^dagger, the only matrix shape the block algebra produces
struct DiagRankOne {
    Eigen::VectorXd diag;
    Eigen::VectorXcd g;
    double sigma = 0.0;

    long size() const { return diag.size(); }
    Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
    Eigen::VectorXcd solve(const Eigen::VectorXcd& x) const;
    Eigen::MatrixXcd dense() const;
    // entry (i, j) of the inverse; requires a nonsingular diagonal
    cd inverse_entry(long i, long j) const;
};

// (diag(D) + scale g g^dagger)^{-1} x in O(d). One exactly vanishing diagonal
// entry is allowed when the rank-one term lifts it; anything else that makes
// the matrix singular throws singular_error.
Eigen::VectorXcd sherman_morrison_inverse(const Eigen::VectorXd& diag, const Eigen::VectorXcd& g,
                                          double scale, const Eigen::VectorXcd& x);

} // namespace hcg

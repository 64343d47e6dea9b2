#include "hcg/block_matrices.hpp"
#include "hcg/errors.hpp"

#include <cmath>

namespace hcg {

Selection build_selection(const ModeBasis& basis)
{
    const long d = basis.d;
    Selection s;
    s.S = Eigen::VectorXcd::Zero(d);
    s.S[0] = 1.0 / basis.c[0];
    s.T = Eigen::MatrixXcd::Zero(d, d - 1);
    for (long b = 1; b < d; ++b) {
        s.T(0, b - 1) = -basis.c[b] / basis.c[0];
        s.T(b, b - 1) = 1.0;
    }
    return s;
}

Eigen::VectorXd BlockSystem::weights() const
{
    return (omega0 * omega0 - omega.array().square()).matrix();
}

double BlockSystem::coefficient_norm() const
{
    return std::norm(c0) + c.squaredNorm();
}

BlockSystem build_blocks(const ModeBasis& basis, double mass)
{
    if (basis.d < 1) throw contract_error("build_blocks: empty basis");
    if (std::abs(basis.c[0]) == 0.0)
        throw contract_error("build_blocks: followed mode has vanishing coefficient");
    BlockSystem b;
    const long n = basis.d - 1;
    b.L = basis.L;
    b.d = basis.d;
    b.groups = basis.groups;
    b.mu = mass;
    b.c0 = basis.c[0];
    b.c = basis.c.tail(n);
    b.omega = basis.w.tail(n);
    b.theta = basis.theta.tail(n);
    b.m.assign(basis.m.begin() + 1, basis.m.end());
    b.omega0 = basis.w[0];
    b.theta0 = basis.theta[0];

    const double c0sq = std::norm(b.c0);
    const double w0sq = b.omega0 * b.omega0;
    b.M_SS = mass / c0sq;
    b.V_SS = mass * w0sq / c0sq;
    b.M_ST = -(mass / c0sq) * b.c.transpose();
    b.V_ST = -(mass * w0sq / c0sq) * b.c.transpose();

    b.M_TT.diag = Eigen::VectorXd::Constant(n, mass);
    b.M_TT.g = b.u();
    b.M_TT.sigma = mass / c0sq;
    b.V_TT.diag = mass * b.omega.array().square().matrix();
    b.V_TT.g = b.u();
    b.V_TT.sigma = mass * w0sq / c0sq;
    return b;
}

DenseBlocks dense_blocks(const ModeBasis& basis, double mass)
{
    const Selection sel = build_selection(basis);
    Eigen::VectorXd w2 = basis.w.array().square();
    const Eigen::MatrixXcd K = (mass * w2).cast<cd>().asDiagonal();
    DenseBlocks r;
    r.M_SS = mass * sel.S.squaredNorm();
    r.V_SS = sel.S.dot(K * sel.S);
    r.M_ST = mass * (sel.S.adjoint() * sel.T);
    r.V_ST = sel.S.adjoint() * K * sel.T;
    r.M_TT = mass * (sel.T.adjoint() * sel.T);
    r.V_TT = sel.T.adjoint() * K * sel.T;
    return r;
}

ReducedForms reduced_forms(const BlockSystem& b)
{
    ReducedForms r;
    r.kinetic = b.mu / b.coefficient_norm();
    r.potential = r.kinetic * b.omega0 * b.omega0;
    r.coupling = r.kinetic * (b.c.array() * b.weights().cast<cd>().array()).matrix().transpose();
    return r;
}

namespace {

DiagRankOne mass_power(const BlockSystem& b, double sign)
{
    const long n = b.env_size();
    DiagRankOne r;
    const double root = std::pow(b.mu, 0.5 * sign);
    r.diag = Eigen::VectorXd::Constant(n, root);
    r.g = b.u();
    const double usq = r.g.squaredNorm();
    if (usq == 0.0) return r;
    const double ratio = usq / std::norm(b.c0);
    // sqrt(1+r)-1 and 1/sqrt(1+r)-1 without cancellation
    const double s = std::sqrt(1.0 + ratio);
    const double f = sign > 0 ? ratio / (s + 1.0) : -ratio / (s * (s + 1.0));
    r.sigma = root * f / usq;
    return r;
}

} // namespace

DiagRankOne mass_sqrt(const BlockSystem& b) { return mass_power(b, 1.0); }
DiagRankOne mass_inv_sqrt(const BlockSystem& b) { return mass_power(b, -1.0); }

} // namespace hcg

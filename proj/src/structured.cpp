#include "hcg/structured.hpp"
#include "hcg/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace hcg {

Eigen::VectorXcd DiagRankOne::apply(const Eigen::VectorXcd& x) const
{
    const cd s = g.dot(x);   // g^dagger x
    return (diag.cast<cd>().array() * x.array()).matrix() + (sigma * s) * g;
}

Eigen::VectorXcd DiagRankOne::solve(const Eigen::VectorXcd& x) const
{
    return sherman_morrison_inverse(diag, g, sigma, x);
}

Eigen::MatrixXcd DiagRankOne::dense() const
{
    Eigen::MatrixXcd A = sigma * (g * g.adjoint());
    A.diagonal() += diag.cast<cd>();
    return A;
}

cd DiagRankOne::inverse_entry(long i, long j) const
{
    double q = 0.0;
    for (long b = 0; b < size(); ++b) q += std::norm(g[b]) / diag[b];
    const cd off = -sigma * g[i] * std::conj(g[j]) / (diag[i] * diag[j] * (1.0 + sigma * q));
    return (i == j ? cd(1.0 / diag[i]) : cd(0.0)) + off;
}

Eigen::VectorXcd sherman_morrison_inverse(const Eigen::VectorXd& diag, const Eigen::VectorXcd& g,
                                          double scale, const Eigen::VectorXcd& x)
{
    const long n = diag.size();
    if (g.size() != n || x.size() != n)
        throw contract_error("sherman_morrison_inverse: size mismatch");

    long zero = -1, nzero = 0;
    for (long i = 0; i < n; ++i)
        if (diag[i] == 0.0) {
            zero = i;
            ++nzero;
        }
    if (nzero > 1)
        throw singular_error("sherman_morrison_inverse: " + std::to_string(nzero) +
                             " vanishing diagonal entries");

    Eigen::VectorXcd y(n);
    if (nzero == 0) {
        cd num = 0.0;
        double q = 0.0;
        for (long i = 0; i < n; ++i) {
            num += std::conj(g[i]) * x[i] / diag[i];
            q += std::norm(g[i]) / diag[i];
        }
        const double den = 1.0 + scale * q;
        const double eps = std::numeric_limits<double>::epsilon();
        if (std::abs(den) <= 64 * eps * (1.0 + std::abs(scale * q)))
            throw singular_error("sherman_morrison_inverse: rank-one update cancels the diagonal");
        const cd s = num / den;
        for (long i = 0; i < n; ++i) y[i] = (x[i] - scale * g[i] * s) / diag[i];
        return y;
    }

    const long a = zero;
    if (g[a] == cd(0.0) || scale == 0.0)
        throw singular_error("sherman_morrison_inverse: vanishing diagonal entry " + std::to_string(a) +
                             " is not lifted by the rank-one term");
    // row a fixes s = g^dagger y
    const cd s = x[a] / (scale * g[a]);
    cd rest = 0.0;
    for (long i = 0; i < n; ++i) {
        if (i == a) continue;
        y[i] = (x[i] - scale * g[i] * s) / diag[i];
        rest += std::conj(g[i]) * y[i];
    }
    y[a] = (s - rest) / std::conj(g[a]);
    return y;
}

} // namespace hcg

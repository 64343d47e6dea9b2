#include "hcg/noise.hpp"
#include "hcg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hcg {

namespace {

cd complex_normal(std::mt19937_64& rng)
{
    std::normal_distribution<double> nd;
    const double re = nd(rng);
    const double im = nd(rng);
    return cd(re, im) * std::sqrt(0.5);
}

Eigen::VectorXcd draw_inverse(const DiagRankOne& A, double kT, std::mt19937_64& rng)
{
    const long n = A.size();
    Eigen::VectorXcd z(n);
    for (long i = 0; i < n; ++i) z[i] = std::sqrt(A.diag[i]) * complex_normal(rng);
    z += std::sqrt(A.sigma) * complex_normal(rng) * A.g;
    return std::sqrt(kT) * A.solve(z);
}

} // namespace

NoiseRealization draw_thermal(const BlockSystem& b, double kT, std::mt19937_64& rng)
{
    NoiseRealization r;
    r.dq = draw_inverse(b.V_TT, kT, rng);
    r.dqdot = draw_inverse(b.M_TT, kT, rng);
    return r;
}

cd noise_simple(double t, const NoiseRealization& r, const BlockSystem& b)
{
    const long n = b.env_size();
    if (r.dq.size() != n || r.dqdot.size() != n)
        throw contract_error("noise_simple: realization size does not match the environment");
    cd s = 0.0;
    for (long i = 0; i < n; ++i) {
        const double w = b.omega[i];
        const double W = b.omega0 * b.omega0 - w * w;
        s += b.c[i] * W * (std::cos(w * t) * r.dq[i] + std::sin(w * t) / w * r.dqdot[i]);
    }
    return s;
}

LagrangianCoefficients lagrangian_coefficients(const BlockSystem& b, const SpectralData& s)
{
    LagrangianCoefficients k;
    const Eigen::VectorXcd Wu = (b.weights().cast<cd>().array() * b.u().array()).matrix();
    k.a = s.project_inv_sqrt(Wu);
    k.nu = s.nu2.array().sqrt();
    k.K = reduced_forms(b).kinetic;
    return k;
}

LagrangianNoise::LagrangianNoise(const BlockSystem& b, const SpectralData& s, const NoiseRealization& r)
    : k_(lagrangian_coefficients(b, s))
{
    if (r.dq.size() != b.env_size() || r.dqdot.size() != b.env_size())
        throw contract_error("noise_lagrangian: realization size does not match the environment");
    p_ = s.project_sqrt(r.dq);
    pdot_ = s.project_sqrt(r.dqdot);
}

cd LagrangianNoise::operator()(double t) const
{
    cd acc = 0.0;
    for (long k = 0; k < k_.a.size(); ++k) {
        const double nu = k_.nu[k];
        acc += std::conj(k_.a[k]) * (std::cos(nu * t) * p_[k] + std::sin(nu * t) / nu * pdot_[k]);
    }
    return k_.K * acc;
}

cd noise_lagrangian(double t, const NoiseRealization& r, const BlockSystem& b, const SpectralData& s)
{
    return LagrangianNoise(b, s, r)(t);
}

double corr_simple(double t, double tp, const BlockSystem& b, double kT)
{
    const long n = b.env_size();
    if (n == 0) return 0.0;
    Eigen::VectorXcd x(n), xp(n), y(n), yp(n);
    const Eigen::VectorXcd u = b.u();
    for (long i = 0; i < n; ++i) {
        const double w = b.omega[i];
        const double W = b.omega0 * b.omega0 - w * w;
        x[i] = W * std::cos(w * t) * u[i];
        xp[i] = W * std::cos(w * tp) * u[i];
        y[i] = W * std::sin(w * t) / w * u[i];
        yp[i] = W * std::sin(w * tp) / w * u[i];
    }
    const cd v = x.dot(b.V_TT.solve(xp)) + y.dot(b.M_TT.solve(yp));
    return kT * v.real();
}

double corr_lagrangian(double t, double tp, const LagrangianCoefficients& k, double kT)
{
    double acc = 0.0;
    for (long i = 0; i < k.a.size(); ++i) acc += std::norm(k.a[i]) * std::cos(k.nu[i] * (t - tp)) / (k.nu[i] * k.nu[i]);
    return k.K * k.K * kT * acc;
}

double corr_lagrangian(double t, double tp, const BlockSystem& b, const SpectralData& s, double kT)
{
    return corr_lagrangian(t, tp, lagrangian_coefficients(b, s), kT);
}

namespace {

// diagonal of (D + sigma g g^dagger)^{-1}
Eigen::VectorXd inverse_diagonal(const DiagRankOne& A)
{
    const long n = A.size();
    double q = 0.0;
    for (long i = 0; i < n; ++i) q += std::norm(A.g[i]) / A.diag[i];
    const double den = 1.0 + A.sigma * q;
    Eigen::VectorXd r(n);
    for (long i = 0; i < n; ++i)
        r[i] = 1.0 / A.diag[i] - A.sigma * std::norm(A.g[i]) / (A.diag[i] * A.diag[i] * den);
    return r;
}

} // namespace

NoiseSpectrum noise_strength(long L, long d, long groups, TimeAverage mode)
{
    NoiseSpectrum out;
    out.L = L;
    out.d = d;
    const ModeBasis basis = build_mode_basis(L, groups, d);
    if (d == 1) return out;
    const BlockSystem b = build_blocks(basis);
    const long n = b.env_size();
    const Eigen::VectorXd W = b.weights();
    out.per_mode.assign(n, 0.0);

    if (mode == TimeAverage::unit_factor) {
        for (long i = 0; i < n; ++i)
            out.per_mode[i] = std::norm(b.c[i]) * W[i] * W[i] / (b.omega[i] * b.omega[i]);
    } else {
        const Eigen::VectorXd vinv = inverse_diagonal(b.V_TT);
        const Eigen::VectorXd minv = inverse_diagonal(b.M_TT);
        for (long i = 0; i < n; ++i)
            out.per_mode[i] = std::norm(b.c[i]) * W[i] * W[i] * 0.5 *
                              (vinv[i] + minv[i] / (b.omega[i] * b.omega[i]));
    }
    if (mode == TimeAverage::exact) {
        // cross terms between exactly degenerate modes survive the average;
        // w_b depends on m only through min(m, Md - m) mod Md
        const long md = b.groups * b.d;
        std::map<long, std::vector<long>> groups_by_m;
        for (long i = 0; i < n; ++i) {
            const long r = ((b.m[i] % md) + md) % md;
            groups_by_m[std::min(r, md - r)].push_back(i);
        }
        const Eigen::VectorXcd u = b.u();
        for (const auto& [m, idx] : groups_by_m) {
            if (idx.size() < 2) continue;
            for (long i : idx)
                for (long j : idx) {
                    if (i == j) continue;
                    const cd vij = b.V_TT.inverse_entry(i, j);
                    const cd mij = b.M_TT.inverse_entry(i, j);
                    const cd term = std::conj(u[i]) * W[i] * (vij + mij / (b.omega[i] * b.omega[j])) * W[j] * u[j];
                    out.per_mode[i] += 0.5 * term.real();
                }
        }
    }
    for (double v : out.per_mode) out.S2 += v;
    return out;
}

std::pair<double, double> asymptotic_estimates(long L, long d, long groups)
{
    if (d < 1 || groups <= 0) throw contract_error("asymptotic_estimates: bad arguments");
    const double x = pi * double(L) / double(groups);
    return {x * x, x * x / double(d)};
}

} // namespace hcg

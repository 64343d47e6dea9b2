#include "hcg/chain_model.hpp"
#include "hcg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hcg {

namespace {

// sin(pi p / q) with the argument reduced in integers first
double sin_pi_ratio(long p, long q)
{
    long r = p % (2 * q);
    if (r < 0) r += 2 * q;
    if (r >= q) return -std::sin(pi * double(r - q) / double(q));
    return std::sin(pi * double(r) / double(q));
}

// Dirichlet factor sin(pi p/M) / sin(pi p/(M d)); limit d at p = 0
double dirichlet(long p, long groups, long d)
{
    if (p == 0) return double(d);
    return sin_pi_ratio(p, groups) / sin_pi_ratio(p, groups * d);
}

} // namespace

double fine_mode_frequency(long ell, const ChainGeometry& g)
{
    if (ell < 0 || 2 * ell > g.total_atoms)
        throw contract_error("fine_mode_frequency: mode " + std::to_string(ell) + " out of range");
    return 2.0 * g.omega * sin_pi_ratio(ell, g.total_atoms);
}

long index_map(long L, long k, long groups)
{
    if (k % 2 == 0) return L + k * groups / 2;
    return -L + (k + 1) * groups / 2;
}

ModeBasis build_mode_basis(long L, long groups, long d)
{
    if (groups <= 0 || groups % 2 != 0)
        throw contract_error("build_mode_basis: number of groups must be positive and even");
    if (d < 1)
        throw contract_error("build_mode_basis: clump size must be positive");
    if (L < 0 || 2 * L > groups)
        throw contract_error("build_mode_basis: L must lie in [0, M/2]");

    ModeBasis b;
    b.L = L;
    b.groups = groups;
    b.d = d;
    b.phase = (d % 2 == 0) ? -pi / double(groups * d) : 0.0;
    b.m.resize(d);
    b.c.resize(d);
    b.theta.resize(d);
    b.w.resize(d);
    for (long k = 0; k < d; ++k) {
        const long m = index_map(L, k, groups);
        b.m[k] = m;
        b.theta[k] = pi * double(m) / double(groups * d);
        b.w[k] = 2.0 * sin_pi_ratio(m, groups * d);
        const double amp = dirichlet(m, groups, d) / double(d);
        // m phi = -theta for even d
        b.c[k] = (d % 2 == 0) ? std::polar(amp, -b.theta[k]) : cd(amp, 0.0);
    }
    b.Omega = b.w[0];
    return b;
}

ModeBasis build_mode_basis(long L, const ChainGeometry& g)
{
    g.validate();
    return build_mode_basis(L, g.groups, g.clump_size);
}

Eigen::VectorXd project_to_coarse(const Eigen::VectorXd& x, const ChainGeometry& g)
{
    if (x.size() != g.total_atoms)
        throw contract_error("project_to_coarse: expected " + std::to_string(g.total_atoms) +
                             " displacements, got " + std::to_string(x.size()));
    const long d = g.clump_size, M = g.groups, N = g.group_size, NN = g.total_atoms;
    // [-d/2]+1 .. [d/2] with [.] the floor
    const long lo = (d % 2 == 0) ? -d / 2 + 1 : -(d - 1) / 2;
    const long hi = d / 2;
    Eigen::VectorXd X = Eigen::VectorXd::Zero(M);
    for (long J = 0; J < M; ++J) {
        double s = 0.0;
        for (long k = 0; k < N / d; ++k)
            for (long m = lo; m <= hi; ++m) {
                long j = (J * d + m + k * M * d) % NN;
                if (j < 0) j += NN;
                s += x[j];
            }
        X[J] = s / double(N);
    }
    return X;
}

Eigen::VectorXd synthesize_from_modes(const Eigen::VectorXcd& A, long groups)
{
    if (A.size() != groups / 2 + 1)
        throw contract_error("synthesize_from_modes: expected M/2+1 coarse modes");
    Eigen::VectorXd X = Eigen::VectorXd::Zero(groups);
    const double norm = 1.0 / std::sqrt(double(groups));
    for (long J = 0; J < groups; ++J) {
        double s = 0.0;
        for (long L = 0; L <= groups / 2; ++L) {
            const cd F = std::polar(norm, 2.0 * pi * double((J * L) % groups) / double(groups));
            s += 2.0 * std::real(A[L] * F);
        }
        X[J] = s;
    }
    return X;
}

Eigen::VectorXcd decompose_to_modes(const Eigen::VectorXd& X)
{
    const long M = X.size();
    if (M <= 0 || M % 2 != 0)
        throw contract_error("decompose_to_modes: number of groups must be positive and even");
    const double norm = 1.0 / std::sqrt(double(M));
    Eigen::VectorXcd A(M / 2 + 1);
    for (long L = 0; L <= M / 2; ++L) {
        cd s = 0.0;
        for (long J = 0; J < M; ++J)
            s += X[J] * std::polar(norm, -2.0 * pi * double((J * L) % M) / double(M));
        if (L == 0 || 2 * L == M) s = cd(0.5 * s.real(), 0.0);
        A[L] = s;
    }
    return A;
}

Eigen::VectorXd synthesize_atoms(const Eigen::VectorXcd& a, long total_atoms)
{
    if (a.size() != total_atoms / 2 + 1)
        throw contract_error("synthesize_atoms: expected script N/2+1 fine amplitudes");
    const double norm = 1.0 / std::sqrt(double(total_atoms));
    Eigen::VectorXd x = Eigen::VectorXd::Zero(total_atoms);
    for (long j = 0; j < total_atoms; ++j) {
        double s = 0.0;
        for (long l = 0; l <= total_atoms / 2; ++l) {
            if (a[l] == cd(0.0)) continue;
            const cd f = std::polar(norm, 2.0 * pi * double((j * l) % total_atoms) / double(total_atoms));
            s += 2.0 * std::real(a[l] * f);
        }
        x[j] = s;
    }
    return x;
}

std::vector<ProjectionTerm> coarse_projection(long L, const ChainGeometry& g)
{
    g.validate();
    const long M = g.groups, d = g.clump_size, N = g.group_size;
    if (L < 0 || 2 * L > M)
        throw contract_error("coarse_projection: L must lie in [0, M/2]");
    std::vector<long> ps;
    for (long k = 0; k < d; ++k) ps.push_back(index_map(L, k, M));
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

    const bool self_conjugate = (L == 0 || 2 * L == M);
    // group centre sits half a site off for even d
    const double shift = (d % 2 == 0) ? pi / double(M * d) : 0.0;
    std::vector<ProjectionTerm> terms;
    for (long p : ps) {
        const double D = dirichlet(p, M, d);
        if (D == 0.0) continue;
        ProjectionTerm t;
        t.n = p * (N / d);
        t.m = p;
        t.gamma = std::polar(D / (double(d) * std::sqrt(double(N))), shift * double(p));
        const long r = p % M;
        if (self_conjugate)
            t.kind = ProjectionTerm::real_part;
        else
            t.kind = (r == L) ? ProjectionTerm::direct : ProjectionTerm::conjugate;
        terms.push_back(t);
    }
    return terms;
}

cd apply_projection(const std::vector<ProjectionTerm>& terms, const Eigen::VectorXcd& a)
{
    cd s = 0.0;
    for (const auto& t : terms) {
        const cd v = t.gamma * a[t.n];
        switch (t.kind) {
        case ProjectionTerm::direct: s += v; break;
        case ProjectionTerm::conjugate: s += std::conj(v); break;
        case ProjectionTerm::real_part: s += v.real(); break;
        }
    }
    return s;
}

} // namespace hcg

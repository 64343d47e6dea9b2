#include "hcg/spectral.hpp"
#include "hcg/errors.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace hcg {

double pole_gap(long ma, long mb, long md)
{
    return 4.0 * std::sin(pi * double(ma - mb) / double(md)) * std::sin(pi * double(ma + mb) / double(md));
}

Eigen::MatrixXcd effective_frequency_matrix(const BlockSystem& b)
{
    const Eigen::MatrixXcd R = mass_inv_sqrt(b).dense();
    Eigen::MatrixXcd A = R * b.V_TT.dense() * R;
    return 0.5 * (A + A.adjoint());
}

Eigen::VectorXcd SpectralData::generalized(long k) const
{
    const Implicit& e = implicit_[k];
    const long n = u_.size();
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(n);
    if (!e.secular) {
        for (std::size_t i = 0; i < e.idx.size(); ++i) w[e.idx[i]] = e.val[i];
        return w;
    }
    const long mo = e.origin < 0 ? m0_ : pole_m_[e.origin];
    const double lam_minus_w0 = pole_gap(mo, m0_, md_) + e.delta;
    for (long b = 0; b < n; ++b) {
        if (u_[b] == cd(0.0)) continue;
        if (group_of_[b] < 0) {
            w[b] = -u_[b];
            continue;
        }
        const long mb = pole_m_[group_of_[b]];
        w[b] = u_[b] * (lam_minus_w0 / (pole_gap(mb, mo, md_) - e.delta));
    }
    return e.scale * w;
}

Eigen::VectorXcd SpectralData::project_inv_sqrt(const Eigen::VectorXcd& x) const
{
    if (route == SpectralRoute::dense) return vectors_.adjoint() * minvsqrt_.apply(x);
    Eigen::VectorXcd r(size());
    for (long k = 0; k < size(); ++k) r[k] = generalized(k).dot(x);
    return r;
}

Eigen::VectorXcd SpectralData::project_sqrt(const Eigen::VectorXcd& x) const
{
    if (route == SpectralRoute::dense) return vectors_.adjoint() * msqrt_.apply(x);
    const Eigen::VectorXcd Mx = mass_.apply(x);
    Eigen::VectorXcd r(size());
    for (long k = 0; k < size(); ++k) r[k] = generalized(k).dot(Mx);
    return r;
}

Eigen::VectorXcd SpectralData::eigenvector(long k) const
{
    if (route == SpectralRoute::dense) return vectors_.col(k);
    return msqrt_.apply(generalized(k));
}

Eigen::MatrixXcd SpectralData::eigenvectors() const
{
    if (route == SpectralRoute::dense) return vectors_;
    Eigen::MatrixXcd V(size(), size());
    for (long k = 0; k < size(); ++k) V.col(k) = eigenvector(k);
    return V;
}

namespace {

// orthonormal complement of v inside its own span's ambient space
Eigen::MatrixXcd complement(const Eigen::VectorXcd& v)
{
    const long n = v.size();
    Eigen::MatrixXcd A(n, 1);
    A.col(0) = v;
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
    Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    return Q.rightCols(n - 1);
}

} // namespace

SpectralData effective_frequency(const BlockSystem& b, SpectralRoute route)
{
    const long n = b.env_size();
    SpectralData s;
    s.msqrt_ = mass_sqrt(b);
    s.minvsqrt_ = mass_inv_sqrt(b);
    s.mass_ = b.M_TT;
    if (route == SpectralRoute::automatic)
        route = (b.d <= 2048) ? SpectralRoute::dense : SpectralRoute::secular;
    s.route = route;
    if (n == 0) {
        s.nu2.resize(0);
        s.vectors_.resize(0, 0);
        return s;
    }

    if (route == SpectralRoute::dense) {
        const Eigen::MatrixXcd A = effective_frequency_matrix(b);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
        if (es.info() != Eigen::Success) {
            std::ostringstream os;
            os << "effective_frequency: eigensolver failed for L=" << b.L << " d=" << b.d
               << ", |A|=" << A.norm();
            throw numerical_error(os.str());
        }
        s.nu2 = es.eigenvalues();
        s.vectors_ = es.eigenvectors();
        if (s.nu2.minCoeff() <= 0.0) {
            std::ostringstream os;
            os << "effective_frequency: non-positive eigenvalue " << s.nu2.minCoeff() << " (condition ~ "
               << s.nu2.maxCoeff() / std::abs(s.nu2.minCoeff()) << ")";
            throw numerical_error(os.str());
        }
        return s;
    }

    // secular route
    const double mu = b.mu;
    const double rho = 1.0 / std::norm(b.c0);
    s.u_ = b.u();
    s.md_ = b.groups * b.d;
    s.m0_ = b.L;
    s.omega0sq_ = b.omega0 * b.omega0;
    s.group_of_.assign(n, -1);

    std::map<long, std::vector<long>> by_m;
    for (long i = 0; i < n; ++i) by_m[b.m[i]].push_back(i);

    struct Entry {
        double lambda;
        SpectralData::Implicit e;
    };
    std::vector<Entry> entries;
    std::vector<double> weight;   // z_i for anchors with nonzero weight
    double kappa = 1.0;

    auto add_deflated = [&](double lambda, const std::vector<long>& idx, const Eigen::VectorXcd& v, double norm2) {
        SpectralData::Implicit e;
        e.idx = idx;
        e.val.resize(idx.size());
        const double sc = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < idx.size(); ++i) e.val[i] = v[i] * sc;
        entries.push_back({lambda, e});
    };

    for (const auto& [m, idx] : by_m) {
        const long gsize = idx.size();
        Eigen::VectorXcd ug(gsize);
        for (long i = 0; i < gsize; ++i) ug[i] = s.u_[idx[i]];
        const double z = rho * ug.squaredNorm();
        const double P = 4.0 * std::pow(std::sin(pi * double(m) / double(s.md_)), 2);
        if (m == b.L) {
            // pole coincides with Omega_L^2: the whole group is pinned there
            if (z > 0.0) {
                add_deflated(s.omega0sq_, idx, ug / ug.norm(), mu * (1.0 + z));
                kappa += z;
                const Eigen::MatrixXcd C = complement(ug);
                for (long j = 0; j < C.cols(); ++j) add_deflated(s.omega0sq_, idx, C.col(j), mu);
            } else {
                for (long j = 0; j < gsize; ++j)
                    add_deflated(s.omega0sq_, idx, Eigen::VectorXcd::Unit(gsize, j), mu);
            }
            continue;
        }
        if (z == 0.0) {
            for (long j = 0; j < gsize; ++j) add_deflated(P, idx, Eigen::VectorXcd::Unit(gsize, j), mu);
            continue;
        }
        const long anchor = s.pole_m_.size();
        s.pole_m_.push_back(m);
        weight.push_back(z);
        for (long i : idx) s.group_of_[i] = anchor;
        if (gsize > 1) {
            const Eigen::MatrixXcd C = complement(ug);
            for (long j = 0; j < C.cols(); ++j) add_deflated(P, idx, C.col(j), mu);
        }
    }
    // zero-weight and pinned groups still need a group index for generalized();
    // their u entries vanish or are handled by the -1 branch
    for (long i = 0; i < n; ++i)
        if (s.group_of_[i] < 0 && b.m[i] != b.L && s.u_[i] != cd(0.0))
            throw numerical_error("effective_frequency: inconsistent deflation");

    const long G = s.pole_m_.size();
    auto mof = [&](long a) { return a < 0 ? s.m0_ : s.pole_m_[a]; };
    for (long j = 0; j < G; ++j) {
        const long lo = j - 1, hi = j;
        const double span = pole_gap(mof(hi), mof(lo), s.md_);
        auto phi = [&](long o, double delta) {
            double acc = 0.0;
            for (long i = 0; i < G; ++i) acc += weight[i] / (pole_gap(s.pole_m_[i], mof(o), s.md_) - delta);
            return acc - kappa / (pole_gap(mof(o), s.m0_, s.md_) + delta);
        };
        long origin;
        double a, c;
        if (phi(lo, 0.5 * span) >= 0.0) {
            origin = lo;
            a = span * 1e-200;
            c = 0.5 * span;
        } else {
            origin = hi;
            a = -0.5 * span;
            c = -span * 1e-200;
        }
        auto f = [&](double dl) { return phi(origin, dl); };
        double fa = f(a), fc = f(c);
        double delta;
        if (fa >= 0.0)
            delta = a;
        else if (fc <= 0.0)
            delta = c;
        else {
            boost::uintmax_t iters = 300;
            auto r = boost::math::tools::toms748_solve(f, a, c, fa, fc,
                                                       boost::math::tools::eps_tolerance<double>(52), iters);
            delta = 0.5 * (r.first + r.second);
        }
        SpectralData::Implicit e;
        e.secular = true;
        e.origin = origin;
        e.delta = delta;
        e.scale = 1.0;
        const double P0 = 4.0 * std::pow(std::sin(pi * double(mof(origin)) / double(s.md_)), 2);
        entries.push_back({P0 + delta, e});
    }

    std::vector<long> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](long x, long y) { return entries[x].lambda < entries[y].lambda; });
    s.nu2.resize(entries.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        s.nu2[k] = entries[order[k]].lambda;
        s.implicit_.push_back(entries[order[k]].e);
    }
    if (long(s.implicit_.size()) != n)
        throw numerical_error("effective_frequency: secular route lost eigenpairs");
    // normalise the secular vectors to w^dagger M w = 1
    for (long k = 0; k < n; ++k) {
        auto& e = s.implicit_[k];
        if (!e.secular) continue;
        const Eigen::VectorXcd w = s.generalized(k);
        const double n2 = std::real(w.dot(s.mass_.apply(w)));
        e.scale = 1.0 / std::sqrt(n2);
    }
    if (s.nu2.minCoeff() <= 0.0) throw numerical_error("effective_frequency: non-positive eigenvalue");
    return s;
}

} // namespace hcg

#include "hcg/continuum.hpp"
#include "hcg/chain_model.hpp"
#include "hcg/errors.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hcg {

WaveField WaveField::make(const Eigen::VectorXd& X, const Eigen::VectorXd& V, const ChainGeometry& g)
{
    if (X.size() != V.size()) throw contract_error("WaveField: positions and velocities differ in length");
    if (!(g.mass > 0 && g.omega > 0 && g.spacing > 0)) throw contract_error("WaveField: nonpositive constants");
    WaveField f;
    f.X = X;
    f.V = V;
    f.density = g.mass / g.spacing;
    f.youngs_modulus = g.mass * g.omega * g.omega * g.spacing;
    f.wave_speed = g.omega * g.spacing;
    return f;
}

namespace {

Eigen::VectorXd laplacian(const Eigen::VectorXd& X)
{
    const long n = X.size();
    Eigen::VectorXd r(n);
    for (long J = 0; J < n; ++J) r[J] = X[(J + 1) % n] - 2.0 * X[J] + X[(J + n - 1) % n];
    return r;
}

} // namespace

WaveField lattice_wave_step(const WaveField& f, double dt, const ChainGeometry& g, long d)
{
    if (d < 1) throw contract_error("lattice_wave_step: d must be positive");
    const double k = g.omega / double(d);
    if (k * dt > 1.0) {
        std::ostringstream os;
        os << "lattice_wave_step: (w/d) dt = " << k * dt << " exceeds 1";
        throw config_error(os.str());
    }
    const double k2 = k * k;
    WaveField r = f;
    const Eigen::VectorXd vh = f.V + 0.5 * dt * k2 * laplacian(f.X);
    r.X = f.X + dt * vh;
    r.V = vh + 0.5 * dt * k2 * laplacian(r.X);
    return r;
}

double lattice_energy(const WaveField& f, const ChainGeometry& g, long d)
{
    const long n = f.X.size();
    const double k2 = std::pow(g.omega / double(d), 2);
    double e = 0.5 * f.V.squaredNorm();
    for (long J = 0; J < n; ++J) e += 0.5 * k2 * std::pow(f.X[(J + 1) % n] - f.X[J], 2);
    return e;
}

double lattice_shadow_energy(const WaveField& f, double dt, const ChainGeometry& g, long d)
{
    const long n = f.X.size();
    Eigen::FFT<double> fft;
    std::vector<double> x(f.X.data(), f.X.data() + n), v(f.V.data(), f.V.data() + n);
    std::vector<cd> X, V;
    fft.fwd(X, x);
    fft.fwd(V, v);
    const double k = g.omega / double(d);
    double e = 0.0;
    for (long q = 0; q < n; ++q) {
        const double W = 2.0 * k * std::sin(pi * double(q) / double(n));
        e += 0.5 * (std::norm(V[q]) / (1.0 - 0.25 * dt * dt * W * W) + W * W * std::norm(X[q]));
    }
    return e / double(n);
}

Eigen::VectorXd continuum_solution(const Eigen::VectorXd& X0, const Eigen::VectorXd& V0, double t,
                                   double wave_speed, double period_length)
{
    const long n = X0.size();
    if (V0.size() != n) throw contract_error("continuum_solution: profile and velocity differ in length");
    if (n == 0) return X0;
    if (!(wave_speed > 0 && period_length > 0)) throw contract_error("continuum_solution: bad speed or length");
    Eigen::FFT<double> fft;
    std::vector<double> x(X0.data(), X0.data() + n), v(V0.data(), V0.data() + n);
    std::vector<cd> X, V;
    fft.fwd(X, x);
    fft.fwd(V, v);
    for (long q = 0; q < n; ++q) {
        // signed wavenumber; the Nyquist entry uses |k|
        const long s = (q <= n / 2) ? q : q - n;
        const double kq = 2.0 * pi * double(std::abs(s)) / period_length;
        const double w = wave_speed * kq;
        if (w == 0.0)
            X[q] = X[q] + V[q] * t;
        else
            X[q] = X[q] * std::cos(w * t) + V[q] * (std::sin(w * t) / w);
    }
    std::vector<double> out;
    fft.inv(out, X);
    return Eigen::Map<Eigen::VectorXd>(out.data(), n);
}

DispersionMeasurement measure_dispersion(long L, const ChainGeometry& g, long d, double dt, long steps)
{
    const long M = g.groups;
    if (L < 1 || 2 * L >= M) throw contract_error("measure_dispersion: need 1 <= L < M/2");
    if (steps < 3) throw contract_error("measure_dispersion: need at least 3 steps");
    Eigen::VectorXd X(M), V = Eigen::VectorXd::Zero(M);
    for (long J = 0; J < M; ++J) X[J] = std::cos(2.0 * pi * double((J * L) % M) / double(M));
    WaveField f = WaveField::make(X, V, g);
    std::vector<double> hist{f.X[0]};
    for (long n = 0; n < steps; ++n) {
        f = lattice_wave_step(f, dt, g, d);
        hist.push_back(f.X[0]);
    }
    // largest |X_n| gives the best-conditioned ratio
    long best = 1;
    for (long n = 1; n + 1 < long(hist.size()); ++n)
        if (std::abs(hist[n]) > std::abs(hist[best])) best = n;
    const double c = (hist[best + 1] + hist[best - 1]) / (2.0 * hist[best]);
    DispersionMeasurement m;
    m.measured = std::acos(std::clamp(c, -1.0, 1.0)) / dt;
    m.lattice = 2.0 * g.omega / double(d) * std::sin(pi * double(L) / double(M));
    m.scheme = 2.0 / dt * std::asin(0.5 * m.lattice * dt);
    m.exact_chain = 2.0 * g.omega * std::sin(pi * double(L) / (double(M) * double(d)));
    m.scheme_error = std::abs(m.measured - m.scheme) / m.scheme;
    m.chain_error = std::abs(m.measured - m.exact_chain) / m.exact_chain;
    const double x = pi * double(L) / double(M);
    m.chain_bound = x * x / 6.0 + std::pow(m.lattice * dt, 2) / 24.0;
    return m;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const long n = x.size();
    if (n < 2 || long(y.size()) != n) throw contract_error("loglog_slope: need two or more points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (long i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceTable convergence_study(long L, const std::vector<long>& groups, long group_size, ConvergenceRoute route)
{
    if (groups.empty()) throw contract_error("convergence_study: empty group list");
    ConvergenceTable tab;
    tab.L = L;
    tab.group_size = group_size;
    tab.route = route;
    for (long M : groups) {
        ChainGeometry g = ChainGeometry::natural(M, group_size, group_size);
        if (L < 1 || 2 * L >= M) throw contract_error("convergence_study: need 1 <= L < M/2");
        const long NN = g.total_atoms;
        const double Tc = double(NN) / (double(L) * g.omega);   // continuum period, dx = 1
        Eigen::VectorXd X0(M), V0(M), Xt(M);
        if (route == ConvergenceRoute::chain) {
            const double wL = fine_mode_frequency(L, g);
            Eigen::VectorXd x0(NN), v0(NN), xt(NN);
            for (long j = 0; j < NN; ++j) {
                const double ph = 2.0 * pi * double((j * L) % NN) / double(NN);
                x0[j] = std::cos(ph);
                v0[j] = wL * std::sin(ph);
                xt[j] = std::cos(ph - wL * Tc);
            }
            X0 = project_to_coarse(x0, g);
            V0 = project_to_coarse(v0, g);
            Xt = project_to_coarse(xt, g);
        } else {
            // nearest-neighbour lattice, exact travelling mode with W = 2 (w/d) sin(pi L/M)
            const double W = 2.0 * g.omega / double(group_size) * std::sin(pi * double(L) / double(M));
            for (long J = 0; J < M; ++J) {
                const double ph = 2.0 * pi * double((J * L) % M) / double(M);
                X0[J] = std::cos(ph);
                V0[J] = W * std::sin(ph);
                Xt[J] = std::cos(ph - W * Tc);
            }
        }
        const Eigen::VectorXd Xc = continuum_solution(X0, V0, Tc, g.omega * g.spacing, double(NN) * g.spacing);
        tab.rows.push_back({M, (Xt - Xc).cwiseAbs().maxCoeff()});
    }
    if (tab.rows.size() >= 2) {
        std::vector<double> x, y;
        for (const auto& r : tab.rows) {
            x.push_back(double(r.groups));
            y.push_back(r.sup_error);
        }
        tab.fitted_slope = loglog_slope(x, y);
    }
    return tab;
}

} // namespace hcg

#include "hcg/ensemble.hpp"
#include "hcg/csv.hpp"
#include "hcg/errors.hpp"
#include "hcg/parallel.hpp"
#include "hcg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace hcg {

void InitialCondition::validate(const ChainGeometry& g) const
{
    if (cutoff < 0 || 2 * cutoff > g.total_atoms)
        throw contract_error("initial condition: cutoff mode out of range");
    if (temperature < 0.0) throw contract_error("initial condition: negative temperature");
    for (const auto& [l, m] : excited_means) {
        if (l < 0 || 2 * l > g.total_atoms) throw contract_error("initial condition: excited mode out of range");
        if (l >= cutoff && (m.first != cd(0.0) || m.second != cd(0.0)))
            throw contract_error("initial condition: nonzero mean at l = " + std::to_string(l) + " >= l_C");
    }
}

namespace {

struct ModeStats {
    double var_a_re, var_a_im, var_p_re, var_p_im;
};

ModeStats thermal_stats(long l, const ChainGeometry& g, double kT)
{
    const double mu = g.mass;
    if (l == 0) return {0.0, 0.0, mu * kT / 4.0, 0.0};
    const double w = fine_mode_frequency(l, g);
    if (2 * l == g.total_atoms) return {kT / (4.0 * mu * w * w), 0.0, mu * kT / 4.0, 0.0};
    return {kT / (2.0 * mu * w * w), kT / (2.0 * mu * w * w), mu * kT / 2.0, mu * kT / 2.0};
}

std::pair<cd, cd> mean_of(const InitialCondition& ic, long l)
{
    auto it = ic.excited_means.find(l);
    return it == ic.excited_means.end() ? std::pair<cd, cd>{0.0, 0.0} : it->second;
}

} // namespace

PhaseSpacePoint sample_initial(const InitialCondition& ic, const ChainGeometry& g, std::mt19937_64& rng)
{
    g.validate();
    ic.validate(g);
    const long n = g.total_atoms / 2 + 1;
    const double kT = g.k_B * ic.temperature;
    PhaseSpacePoint p;
    p.a.resize(n);
    p.pi.resize(n);
    std::normal_distribution<double> nd;
    for (long l = 0; l < n; ++l) {
        const auto [abar, pbar] = mean_of(ic, l);
        p.a[l] = abar;
        p.pi[l] = pbar;
        if (kT == 0.0) continue;
        const ModeStats s = thermal_stats(l, g, kT);
        const double x1 = nd(rng), x2 = nd(rng), x3 = nd(rng), x4 = nd(rng);
        p.a[l] += cd(std::sqrt(s.var_a_re) * x1, std::sqrt(s.var_a_im) * x2);
        p.pi[l] += cd(std::sqrt(s.var_p_re) * x3, std::sqrt(s.var_p_im) * x4);
    }
    return p;
}

PhaseSpacePoint sample_initial(const InitialCondition& ic, const ChainGeometry& g)
{
    auto rng = sample_stream(ic.seed, 0);
    return sample_initial(ic, g, rng);
}

PhaseSpacePoint evolve_exact(const PhaseSpacePoint& p, double t, const ChainGeometry& g)
{
    const long n = p.a.size();
    if (n != g.total_atoms / 2 + 1 || p.pi.size() != n)
        throw contract_error("evolve_exact: phase-space point does not match the geometry");
    const double mu = g.mass;
    PhaseSpacePoint q;
    q.a.resize(n);
    q.pi.resize(n);
    // zero mode: free centre of mass
    q.a[0] = p.a[0] + p.pi[0] * t / mu;
    q.pi[0] = p.pi[0];
    for (long l = 1; l < n; ++l) {
        const double w = fine_mode_frequency(l, g);
        const double c = std::cos(w * t), s = std::sin(w * t);
        q.a[l] = p.a[l] * c + p.pi[l] * (s / (mu * w));
        q.pi[l] = -p.a[l] * (mu * w * s) + p.pi[l] * c;
    }
    return q;
}

double mode_energy(const PhaseSpacePoint& p, long l, const ChainGeometry& g)
{
    const double mu = g.mass;
    const double w = fine_mode_frequency(l, g);
    const double e = 0.5 * (std::norm(p.pi[l]) / mu + mu * w * w * std::norm(p.a[l]));
    // real modes carry x = 2 a f, four times the interior weight
    if (l == 0 || 2 * l == g.total_atoms) return 4.0 * e;
    return e;
}

// ---------------------------------------------------------------- conditioning

namespace {

// rows (Re z, Im z) of z = op(alpha * w) with w = x + i y in columns (cx, cy)
template <class Mat>
void add_term(Mat& R, int row, long cx, long cy, cd alpha, ProjectionTerm::Kind kind)
{
    const double ar = alpha.real(), ai = alpha.imag();
    R(row, cx) += ar;
    R(row, cy) -= ai;
    if (kind == ProjectionTerm::real_part) return;
    const double sgn = kind == ProjectionTerm::conjugate ? -1.0 : 1.0;
    R(row + 1, cx) += sgn * ai;
    R(row + 1, cy) += sgn * ar;
}

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& A)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (A + A.transpose()));
    const Eigen::VectorXd& lam = es.eigenvalues();
    const double top = lam.cwiseAbs().maxCoeff();
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(A.rows(), A.cols());
    for (long i = 0; i < lam.size(); ++i)
        if (lam[i] > 1e-12 * top) P += es.eigenvectors().col(i) * es.eigenvectors().col(i).transpose() / lam[i];
    return P;
}

} // namespace

ConditionalForce::ConditionalForce(const ChainGeometry& g, long L, const InitialCondition& ic)
    : g_(g), L_(L)
{
    g.validate();
    ic.validate(g);
    terms_ = coarse_projection(L, g);
    Omega_ = fine_mode_frequency(L * g.group_size / g.clump_size, g);
    for (const auto& t : terms_) modes_.push_back(t.n);
    const long dim = 4 * long(modes_.size());
    mean_ = Eigen::VectorXd::Zero(dim);
    var_ = Eigen::VectorXd::Zero(dim);
    const double kT = g.k_B * ic.temperature;
    for (std::size_t j = 0; j < modes_.size(); ++j) {
        const auto [abar, pbar] = mean_of(ic, modes_[j]);
        mean_.segment<4>(4 * j) << abar.real(), abar.imag(), pbar.real(), pbar.imag();
        const ModeStats s = thermal_stats(modes_[j], g, kT);
        var_.segment<4>(4 * j) << s.var_a_re, s.var_a_im, s.var_p_re, s.var_p_im;
    }
    H_ = Eigen::Matrix<double, 4, Eigen::Dynamic>::Zero(4, dim);
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        const auto& t = terms_[j];
        add_term(H_, 0, 4 * j, 4 * j + 1, t.gamma, t.kind);
        add_term(H_, 2, 4 * j + 2, 4 * j + 3, t.gamma / g.mass, t.kind);
    }
}

Eigen::Matrix<double, 2, Eigen::Dynamic> ConditionalForce::force_map(double t) const
{
    const long dim = 4 * long(modes_.size());
    Eigen::Matrix<double, 2, Eigen::Dynamic> F = Eigen::Matrix<double, 2, Eigen::Dynamic>::Zero(2, dim);
    const double mu = g_.mass;
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        const auto& tm = terms_[j];
        const double w = fine_mode_frequency(tm.n, g_);
        double c = 1.0, s = t / mu;
        if (tm.n != 0) {
            c = std::cos(w * t);
            s = std::sin(w * t) / (mu * w);
        }
        const cd alpha = tm.gamma * (Omega_ * Omega_ - w * w);
        add_term(F, 0, 4 * j, 4 * j + 1, alpha * c, tm.kind);
        add_term(F, 0, 4 * j + 2, 4 * j + 3, alpha * s, tm.kind);
    }
    return F;
}

ConditionalForce::Gain ConditionalForce::gain(double t) const
{
    Gain gn;
    gn.t = t;
    const auto F = force_map(t);
    const Eigen::MatrixXd S = var_.asDiagonal();
    const Eigen::MatrixXd HS = H_ * S;
    const Eigen::MatrixXd P = pseudo_inverse(HS * H_.transpose());
    gn.K = F * S * H_.transpose() * P;
    const Eigen::Vector2d off = F * mean_ - gn.K * (H_ * mean_);
    gn.offset = cd(off[0], off[1]);
    const Eigen::Matrix2d cov = F * S * F.transpose() - gn.K * HS * F.transpose();
    gn.residual_variance = cov.trace();
    return gn;
}

cd ConditionalForce::apply(const Gain& gn, cd A0, cd Adot0) const
{
    const Eigen::Vector4d o(A0.real(), A0.imag(), Adot0.real(), Adot0.imag());
    const Eigen::Vector2d v = gn.K * o;
    return gn.offset + cd(v[0], v[1]);
}

cd ConditionalForce::coarse(const PhaseSpacePoint& p) const { return apply_projection(terms_, p.a); }

cd ConditionalForce::coarse_rate(const PhaseSpacePoint& p) const
{
    return apply_projection(terms_, p.pi / g_.mass);
}

cd ConditionalForce::drive(const PhaseSpacePoint& p) const
{
    cd s = 0.0;
    for (const auto& t : terms_) {
        const double w = fine_mode_frequency(t.n, g_);
        const cd v = t.gamma * (Omega_ * Omega_ - w * w) * p.a[t.n];
        switch (t.kind) {
        case ProjectionTerm::direct: s += v; break;
        case ProjectionTerm::conjugate: s += std::conj(v); break;
        case ProjectionTerm::real_part: s += v.real(); break;
        }
    }
    return s;
}

// ---------------------------------------------------------------- trajectories

namespace {

double check_uniform(const std::vector<double>& times)
{
    if (times.empty()) throw contract_error("time grid is empty");
    if (times.size() == 1) return 0.0;
    const double h = times[1] - times[0];
    if (!(h > 0)) throw contract_error("time grid must be increasing");
    const double span = times.back() - times.front();
    for (std::size_t i = 1; i < times.size(); ++i)
        if (std::abs(times[i] - times[i - 1] - h) > 1e-9 * std::max(span, 1.0))
            throw contract_error("time grid is not uniform");
    return h;
}

} // namespace

TrajectoryRecord coarse_trajectory(const PhaseSpacePoint& initial, const std::vector<double>& times,
                                   const ChainGeometry& g, bool atom_route)
{
    check_uniform(times);
    g.validate();
    TrajectoryRecord rec;
    rec.times = times;
    const long M = g.groups;
    std::vector<std::vector<ProjectionTerm>> terms(M / 2 + 1);
    for (long L = 0; L <= M / 2; ++L) terms[L] = coarse_projection(L, g);
    for (double t : times) {
        PhaseSpacePoint p = evolve_exact(initial, t, g);
        Eigen::VectorXcd A(M / 2 + 1);
        for (long L = 0; L <= M / 2; ++L) A[L] = apply_projection(terms[L], p.a);
        rec.groups.push_back(synthesize_from_modes(A, M));
        if (atom_route) {
            const Eigen::VectorXd X = project_to_coarse(synthesize_atoms(p.a, g.total_atoms), g);
            const Eigen::VectorXcd A2 = decompose_to_modes(X);
            const double scale = std::max(A.cwiseAbs().maxCoeff(), 1e-300);
            rec.route_mismatch = std::max(rec.route_mismatch, (A - A2).cwiseAbs().maxCoeff() / scale);
            rec.route_mismatch = std::max(rec.route_mismatch,
                                          (X - rec.groups.back()).cwiseAbs().maxCoeff() /
                                              std::max(X.cwiseAbs().maxCoeff(), 1e-300));
            rec.coarse_atoms.push_back(A2);
        }
        rec.coarse.push_back(A);
        rec.fine.push_back(std::move(p));
    }
    return rec;
}

std::vector<cd> residual(const TrajectoryRecord& rec, const ConditionalForce& force)
{
    if (rec.fine.empty()) throw contract_error("residual: empty trajectory");
    if (rec.fine.size() != rec.times.size()) throw contract_error("residual: grid mismatch");
    const cd A0 = force.coarse(rec.fine.front());
    const cd Ad0 = force.coarse_rate(rec.fine.front());
    std::vector<cd> e(rec.times.size());
    for (std::size_t i = 0; i < rec.times.size(); ++i)
        e[i] = force.drive(rec.fine[i]) - force.apply(force.gain(rec.times[i] - rec.times.front()), A0, Ad0);
    return e;
}

std::vector<cd> langevin_evolve(double Omega, cd A0, cd Adot0, const std::vector<double>& times,
                                const std::vector<cd>& force, double omega_max)
{
    const double h = check_uniform(times);
    if (force.size() != times.size()) throw contract_error("langevin_evolve: force/grid size mismatch");
    if (omega_max * h > 0.5) {
        std::ostringstream os;
        os << "langevin_evolve: step " << h << " too large for frequency " << omega_max << " (limit 0.5)";
        throw config_error(os.str());
    }
    std::vector<cd> A(times.size());
    A[0] = A0;
    cd x = A0, v = Adot0;
    const double O2 = Omega * Omega;
    const double c = std::cos(Omega * h), s = std::sin(Omega * h);
    for (std::size_t n = 1; n < times.size(); ++n) {
        const cd F0 = force[n - 1], F1 = force[n];
        const cd k = (F1 - F0) / h;
        if (Omega > 0.0) {
            // x_p = (F0 + k s)/Omega^2 absorbs the linear force exactly
            const cd y0 = x - F0 / O2, yd0 = v - k / O2;
            const cd y1 = y0 * c + yd0 * (s / Omega);
            const cd yd1 = -y0 * (Omega * s) + yd0 * c;
            x = y1 + F1 / O2;
            v = yd1 + k / O2;
        } else {
            x = x + v * h + F0 * (h * h / 2.0) + k * (h * h * h / 6.0);
            v = v + F0 * h + k * (h * h / 2.0);
        }
        A[n] = x;
    }
    return A;
}

std::vector<cd> noise_on_grid(NoiseRoute route, const BlockSystem& b, const SpectralData& s, const ChainGeometry& g,
                              const std::vector<double>& times, std::mt19937_64& rng, const TransformKernel* volterra)
{
    std::vector<cd> out(times.size(), cd(0.0));
    if (b.env_size() == 0) return out;
    const NoiseRealization r = draw_thermal(b, 1.0, rng);
    // reduced -> physical: w^2 sqrt(kT/(N mu w^2)), reduced time w t
    const double scale = g.omega * g.omega * std::sqrt(g.kT() / (double(g.group_size) * g.mass * g.omega * g.omega));
    if (route == NoiseRoute::simple) {
        for (std::size_t i = 0; i < times.size(); ++i) out[i] = scale * noise_simple(g.omega * times[i], r, b);
        return out;
    }
    TransformKernel local;
    if (!volterra) {
        std::vector<double> tau(times.size());
        for (std::size_t i = 0; i < times.size(); ++i) tau[i] = g.omega * times[i];
        local = build_transform(b, s, tau);
        volterra = &local;
    }
    const LagrangianNoise lag(b, s, r);
    Eigen::VectorXcd y(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) y[i] = lag(volterra->times[i]) / volterra->C;
    const Eigen::VectorXcd f = volterra->solve(y);
    for (std::size_t i = 0; i < times.size(); ++i) out[i] = scale * f[i];
    return out;
}

// ---------------------------------------------------------------- runs

bool EnsembleSummary::all_pass() const
{
    return std::all_of(stats.begin(), stats.end(), [](const Statistic& s) { return !s.checked || s.pass; });
}

namespace {

Statistic summarize(const std::string& name, double t, const std::vector<double>& x, double expected, bool check,
                    double sigmas, double extra_se = 0.0)
{
    const Moments m = moments(x);
    Statistic s;
    s.observable = name;
    s.t = t;
    s.mean = m.mean;
    s.variance = m.variance;
    s.standard_error = m.standard_error;
    s.expected = expected;
    s.checked = check;
    const double se = std::sqrt(m.standard_error * m.standard_error + extra_se * extra_se);
    s.pass = !check || std::abs(m.mean - expected) <= sigmas * se;
    return s;
}

std::vector<double> centered_square(const std::vector<cd>& z)
{
    cd mean = 0.0;
    for (const cd& v : z) mean += v;
    mean /= double(z.size());
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = std::norm(z[i] - mean);
    return out;
}

std::vector<double> real_parts(const std::vector<cd>& z)
{
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i].real();
    return out;
}

} // namespace

EnsembleSummary run_ensemble(const EnsembleConfig& cfg)
{
    const ChainGeometry& g = cfg.geometry;
    g.validate();
    cfg.ic.validate(g);
    if (cfg.samples < 1) throw contract_error("ensemble: sample count must be at least 1");
    if (cfg.L < 0 || 2 * cfg.L > g.groups) throw contract_error("ensemble: L out of range");

    const ConditionalForce force(g, cfg.L, cfg.ic);
    const ModeBasis basis = build_mode_basis(cfg.L, g);
    const BlockSystem blocks = build_blocks(basis);
    const SpectralData spec = effective_frequency(blocks);
    const double kT = g.k_B * cfg.ic.temperature;
    const double corr_scale = std::pow(g.omega, 4) * kT / (double(g.group_size) * g.mass * g.omega * g.omega);
    auto corr = [&](double t, double tp) {
        return corr_scale * corr_simple(g.omega * t, g.omega * tp, blocks, 1.0);
    };

    const std::vector<double>& lags = cfg.lags;
    std::vector<ConditionalForce::Gain> lag_gain;
    for (double t : lags) lag_gain.push_back(force.gain(t));

    const long S = cfg.samples;
    const long nl = lags.size();
    std::vector<std::vector<cd>> eps(nl, std::vector<cd>(S)), FL(nl, std::vector<cd>(S));
    std::vector<cd> A_exact(S), A_simple(S), A_trans(S);
    std::vector<double> drift(S, 0.0);

    const bool lang = cfg.langevin && cfg.langevin_time > 0.0;
    std::vector<double> grid;
    std::vector<ConditionalForce::Gain> grid_gain;
    double omega_max = force.frequency();
    TransformKernel volterra;
    if (lang) {
        const long steps = std::max(1L, long(std::ceil(cfg.langevin_time / cfg.langevin_step - 1e-9)));
        grid = uniform_grid(cfg.langevin_time, steps);
        for (double t : grid) grid_gain.push_back(force.gain(t));
        for (const auto& t : force.terms()) omega_max = std::max(omega_max, fine_mode_frequency(t.n, g));
        if (omega_max * (grid[1] - grid[0]) > 0.5)
            throw config_error("ensemble: Langevin step too large for the fastest mode (omega_max * step > 0.5)");
        if (cfg.transformed) {
            std::vector<double> tau(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) tau[i] = g.omega * grid[i];
            volterra = build_transform(blocks, spec, tau);
        }
    }
    const long energy_samples = std::min<long>(S, 16);

    parallel_for(S, cfg.workers, [&](long i) {
        auto rng = sample_stream(cfg.seed, 3 * std::uint64_t(i));
        const PhaseSpacePoint p0 = sample_initial(cfg.ic, g, rng);
        const cd A0 = force.coarse(p0), Ad0 = force.coarse_rate(p0);
        for (long j = 0; j < nl; ++j) {
            const PhaseSpacePoint p = evolve_exact(p0, lags[j], g);
            FL[j][i] = force.apply(lag_gain[j], A0, Ad0);
            eps[j][i] = force.drive(p) - FL[j][i];
        }
        if (i < energy_samples) {
            const PhaseSpacePoint p = evolve_exact(p0, 1e4 / g.omega, g);
            double worst = 0.0;
            for (long l = 0; l < p0.a.size(); ++l) {
                const double e0 = mode_energy(p0, l, g);
                if (e0 > 0.0) worst = std::max(worst, std::abs(mode_energy(p, l, g) - e0) / e0);
            }
            drift[i] = worst;
        }
        if (!lang) return;
        A_exact[i] = force.coarse(evolve_exact(p0, cfg.langevin_time, g));
        for (int route = 0; route < (cfg.transformed ? 2 : 1); ++route) {
            auto r2 = sample_stream(cfg.seed, 3 * std::uint64_t(i) + 1 + route);
            const PhaseSpacePoint q0 = sample_initial(cfg.ic, g, r2);
            const cd B0 = force.coarse(q0), Bd0 = force.coarse_rate(q0);
            std::vector<cd> f = noise_on_grid(route ? NoiseRoute::transformed : NoiseRoute::simple, blocks, spec, g,
                                              grid, r2, route ? &volterra : nullptr);
            for (std::size_t n = 0; n < grid.size(); ++n) f[n] += force.apply(grid_gain[n], B0, Bd0);
            const std::vector<cd> A = langevin_evolve(force.frequency(), B0, Bd0, grid, f, omega_max);
            (route ? A_trans : A_simple)[i] = A.back();
        }
    });

    EnsembleSummary out;
    const double sig = cfg.sigma_threshold;
    for (long j = 0; j < nl; ++j) {
        std::vector<double> sq(S), lag(S), fl(S);
        for (long i = 0; i < S; ++i) {
            sq[i] = std::norm(eps[j][i]);
            lag[i] = (eps[0][i] * std::conj(eps[j][i])).real();
            fl[i] = std::abs(FL[j][i]);
            out.max_abs_residual = std::max(out.max_abs_residual, std::abs(eps[j][i]));
        }
        const double expected = corr(lags[j], lags[j]);
        out.stats.push_back(summarize("residual_variance", lags[j], sq, expected, true, sig));
        out.stats.push_back(summarize("residual_lag_covariance", lags[j], lag, corr(lags[0], lags[j]), true, sig));
        out.stats.push_back(summarize("residual_mean_re", lags[j], real_parts(eps[j]), 0.0, true, sig));
        Statistic f = summarize("F_L_magnitude", lags[j], fl, 0.0, false, sig);
        out.stats.push_back(f);
        if (expected > 0.0) out.force_to_noise = std::max(out.force_to_noise, f.mean / std::sqrt(expected));
    }
    if (lang) {
        const std::vector<double> ve = centered_square(A_exact);
        const Statistic se = summarize("A_exact_variance", cfg.langevin_time, ve, 0.0, false, sig);
        out.stats.push_back(se);
        out.stats.push_back(summarize("A_exact_mean_re", cfg.langevin_time, real_parts(A_exact), 0.0, false, sig));
        const Statistic me = out.stats.back();
        auto route_stats = [&](const std::string& name, const std::vector<cd>& A) {
            out.stats.push_back(
                summarize(name + "_variance", cfg.langevin_time, centered_square(A), se.mean, true, sig, se.standard_error));
            out.stats.push_back(
                summarize(name + "_mean_re", cfg.langevin_time, real_parts(A), me.mean, true, sig, me.standard_error));
        };
        route_stats("A_langevin_simple", A_simple);
        if (cfg.transformed) route_stats("A_langevin_transformed", A_trans);
    }
    out.energy_drift = *std::max_element(drift.begin(), drift.end());
    for (const auto& s : out.stats)
        if (s.checked && std::abs(s.expected) > 0.0 && s.standard_error > 0.1 * std::abs(s.expected))
            out.undersampled = true;
    return out;
}

void write_ensemble_csv(std::ostream& os, const EnsembleConfig& cfg, const EnsembleSummary& s,
                        const std::vector<std::string>& header)
{
    CsvWriter w(os);
    for (const auto& h : header) w.comment(h);
    std::ostringstream info;
    info << "ensemble L=" << cfg.L << " M=" << cfg.geometry.groups << " N=" << cfg.geometry.group_size
         << " d=" << cfg.geometry.clump_size << " samples=" << cfg.samples << " seed=" << cfg.seed;
    w.comment(info.str());
    w.comment("energy_drift=" + CsvWriter::num(s.energy_drift) + " max_abs_residual=" + CsvWriter::num(s.max_abs_residual) +
              " force_to_noise=" + CsvWriter::num(s.force_to_noise) + (s.undersampled ? " UNDERSAMPLED" : ""));
    w.header({"t", "observable", "mean", "variance", "standard_error", "expected", "checked", "pass"});
    for (const auto& st : s.stats)
        w.row({CsvWriter::num(st.t), st.observable, CsvWriter::num(st.mean), CsvWriter::num(st.variance),
               CsvWriter::num(st.standard_error), CsvWriter::num(st.expected), st.checked ? "1" : "0",
               st.pass ? "1" : "0"});
}

} // namespace hcg

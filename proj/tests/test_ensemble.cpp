#include "oracles.hpp"

#include "hcg/ensemble.hpp"
#include "hcg/errors.hpp"
#include "hcg/parallel.hpp"

#include <doctest.h>

#include <sstream>

using namespace hcg;

namespace {

const ChainGeometry desk = ChainGeometry::natural(16, 8, 8);   // script N = 128

} // namespace

TEST_CASE("zero temperature returns the means")
{
    InitialCondition ic;
    ic.cutoff = 3;
    ic.temperature = 0.0;
    ic.excited_means[1] = {cd(0.5, -0.2), cd(0.1, 0.3)};
    ic.excited_means[2] = {cd(-1.0, 0.0), cd(0.0, 0.0)};
    std::mt19937_64 rng(1);
    const PhaseSpacePoint p = sample_initial(ic, desk, rng);
    CHECK(p.a.size() == 65);
    CHECK(p.a[1] == cd(0.5, -0.2));
    CHECK(p.pi[1] == cd(0.1, 0.3));
    CHECK(p.a[2] == cd(-1.0, 0.0));
    CHECK(p.a.tail(60).norm() == 0.0);
    CHECK(p.pi.tail(60).norm() == 0.0);
}

TEST_CASE("excited means above the cutoff are refused")
{
    InitialCondition ic;
    ic.cutoff = 2;
    ic.excited_means[5] = {cd(1.0), cd(0.0)};
    CHECK_THROWS_AS(sample_initial(ic, desk), contract_error);
}

TEST_CASE("thermal sampling: amplitude variance and equipartition")
{
    InitialCondition ic;
    ic.temperature = 1.5;
    const long samples = 10000;
    const long l = 5;
    const double w = fine_mode_frequency(l, desk);
    std::vector<double> a2(samples), H(samples), Hs(samples), p0(samples);
    for (long i = 0; i < samples; ++i) {
        auto rng = sample_stream(17, i);
        const PhaseSpacePoint p = sample_initial(ic, desk, rng);
        a2[i] = std::norm(p.a[l]);
        H[i] = mode_energy(p, 40, desk);
        Hs[i] = mode_energy(p, 64, desk);   // self-conjugate
        p0[i] = std::norm(p.pi[0]);
        CHECK(p.a[0] == cd(0.0));
        CHECK(p.a[64].imag() == 0.0);
    }
    const Moments ma = moments(a2), mh = moments(H), ms = moments(Hs), mp = moments(p0);
    CHECK(std::abs(ma.mean - 1.5 / (w * w)) < 3.0 * ma.standard_error);
    CHECK(std::abs(mh.mean - 1.5) < 3.0 * mh.standard_error);
    CHECK(std::abs(ms.mean - 1.5) < 3.0 * ms.standard_error);
    CHECK(std::abs(mp.mean - 1.5 / 4.0) < 3.0 * mp.standard_error);
}

TEST_CASE("exact evolution: identity, periodicity, energy")
{
    InitialCondition ic;
    ic.seed = 3;
    const PhaseSpacePoint p = sample_initial(ic, desk);
    const PhaseSpacePoint p0 = evolve_exact(p, 0.0, desk);
    CHECK((p0.a - p.a).norm() == 0.0);
    CHECK((p0.pi - p.pi).norm() == 0.0);

    // single excited mode returns after one period
    PhaseSpacePoint one{Eigen::VectorXcd::Zero(65), Eigen::VectorXcd::Zero(65)};
    one.a[7] = cd(0.3, 0.1);
    one.pi[7] = cd(-0.2, 0.5);
    const double T = 2.0 * oracle::pi / fine_mode_frequency(7, desk);
    const PhaseSpacePoint back = evolve_exact(one, T, desk);
    CHECK((back.a - one.a).norm() < 1e-12);
    CHECK((back.pi - one.pi).norm() < 1e-12);

    // zero mode drifts freely
    PhaseSpacePoint z{Eigen::VectorXcd::Zero(65), Eigen::VectorXcd::Zero(65)};
    z.pi[0] = 2.0;
    CHECK(std::abs(evolve_exact(z, 3.0, desk).a[0] - cd(6.0)) < 1e-14);

    double worst = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const PhaseSpacePoint q = evolve_exact(p, 0.731 * i, desk);
        for (long l = 1; l <= 64; ++l) {
            const double e0 = mode_energy(p, l, desk);
            worst = std::max(worst, std::abs(mode_energy(q, l, desk) - e0) / e0);
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("coarse trajectory: both assembly routes agree")
{
    InitialCondition ic;
    ic.seed = 8;
    const PhaseSpacePoint p = sample_initial(ic, desk);
    const auto times = std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0};
    const TrajectoryRecord rec = coarse_trajectory(p, times, desk, true);
    CHECK(rec.route_mismatch < 1e-12);
    REQUIRE(rec.coarse.size() == times.size());
    CHECK(rec.groups.front().size() == 16);
}

TEST_CASE("d = 1: one fine mode per coarse mode, no residual")
{
    const ChainGeometry g = ChainGeometry::natural(16, 8, 1);
    const long L = 3;
    PhaseSpacePoint p{Eigen::VectorXcd::Zero(65), Eigen::VectorXcd::Zero(65)};
    p.a[L * 8] = cd(0.4, 0.2);
    p.pi[L * 8] = cd(0.1, -0.3);
    std::vector<double> times;
    for (int i = 0; i <= 20; ++i) times.push_back(0.25 * i);
    const TrajectoryRecord rec = coarse_trajectory(p, times, g, true);
    const double ratio0 = std::abs(rec.coarse[0][L]) / std::abs(rec.fine[0].a[L * 8]);
    for (std::size_t i = 0; i < times.size(); ++i)
        CHECK(std::abs(rec.coarse[i][L]) / std::abs(rec.fine[i].a[L * 8]) == doctest::Approx(ratio0).epsilon(1e-12));

    InitialCondition ic;
    ic.seed = 2;
    const TrajectoryRecord th = coarse_trajectory(sample_initial(ic, g), times, g, false);
    const ConditionalForce F(g, L, ic);
    for (cd e : residual(th, F)) CHECK(std::abs(e) < 1e-12);
}

TEST_CASE("conditional force: residual variance equals the noise correlation")
{
    InitialCondition ic;
    const ConditionalForce F(desk, 2, ic);
    const BlockSystem b = build_blocks(build_mode_basis(2, desk));
    for (double t : {0.0, 1.0, 4.0}) {
        const double v = F.gain(t).residual_variance;
        CHECK(v == doctest::Approx(corr_simple(t, t, b, 1.0) / 8.0).epsilon(1e-8));
    }
}

TEST_CASE("thermal-only ensemble has zero mean coarse amplitude")
{
    InitialCondition ic;
    const ConditionalForce F(desk, 2, ic);
    const long samples = 4000;
    std::vector<double> re(samples);
    for (long i = 0; i < samples; ++i) {
        auto rng = sample_stream(5, i);
        re[i] = F.coarse(evolve_exact(sample_initial(ic, desk, rng), 2.0, desk)).real();
    }
    const Moments m = moments(re);
    CHECK(std::abs(m.mean) < 3.0 * m.standard_error);
}

TEST_CASE("langevin integrator: free oscillator and linear force are exact")
{
    std::vector<double> times;
    for (int i = 0; i <= 200; ++i) times.push_back(0.02 * i);
    const double O = 1.3;
    const cd A0(0.4, -0.1), V0(0.2, 0.7);
    std::vector<cd> zero(times.size(), 0.0);
    const auto A = langevin_evolve(O, A0, V0, times, zero, O);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        CHECK(std::abs(A[i] - (A0 * std::cos(O * t) + V0 * std::sin(O * t) / O)) < 1e-12);
    }
    // F = f1 t: particular solution f1 t / O^2
    std::vector<cd> lin(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) lin[i] = 0.5 * times[i];
    const auto B = langevin_evolve(O, 0.0, 0.5 / (O * O), times, lin, O);
    for (std::size_t i = 0; i < times.size(); ++i) CHECK(std::abs(B[i] - 0.5 * times[i] / (O * O)) < 1e-12);

    CHECK_THROWS_AS(langevin_evolve(30.0, A0, V0, times, zero, 30.0), config_error);
}

TEST_CASE("ensemble runs are reproducible across worker counts")
{
    EnsembleConfig cfg;
    cfg.samples = 300;
    cfg.seed = 21;
    cfg.workers = 1;
    std::ostringstream a, b;
    write_ensemble_csv(a, cfg, run_ensemble(cfg), {"test"});
    cfg.workers = 3;
    write_ensemble_csv(b, cfg, run_ensemble(cfg), {"test"});
    CHECK(a.str() == b.str());
}

TEST_CASE("ensemble with d = 1 has vanishing residuals")
{
    EnsembleConfig cfg;
    cfg.geometry = ChainGeometry::natural(16, 8, 1);
    cfg.samples = 100;
    cfg.langevin = false;
    const EnsembleSummary s = run_ensemble(cfg);
    CHECK(s.max_abs_residual < 1e-10);
}

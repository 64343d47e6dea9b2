#include "oracles.hpp"

#include "hcg/continuum.hpp"
#include "hcg/errors.hpp"

#include <doctest.h>

using namespace hcg;

namespace {

Eigen::VectorXd mode(long M, long L, double phase = 0.0)
{
    Eigen::VectorXd X(M);
    for (long J = 0; J < M; ++J) X[J] = std::cos(2.0 * oracle::pi * double(L * J) / double(M) + phase);
    return X;
}

} // namespace

TEST_CASE("uniform field is stationary")
{
    const ChainGeometry g = ChainGeometry::natural(32, 8, 8);
    WaveField f = WaveField::make(Eigen::VectorXd::Constant(32, 0.3), Eigen::VectorXd::Zero(32), g);
    for (int i = 0; i < 50; ++i) f = lattice_wave_step(f, 0.5, g, 8);
    CHECK((f.X.array() - 0.3).abs().maxCoeff() < 1e-15);
    CHECK(f.V.norm() < 1e-15);
}

TEST_CASE("Verlet step is time reversible")
{
    const ChainGeometry g = ChainGeometry::natural(32, 8, 8);
    std::mt19937_64 rng(9);
    std::normal_distribution<double> nd;
    Eigen::VectorXd X(32), V(32);
    for (long i = 0; i < 32; ++i) {
        X[i] = nd(rng);
        V[i] = nd(rng);
    }
    const WaveField f0 = WaveField::make(X, V, g);
    WaveField f = f0;
    for (int i = 0; i < 100; ++i) f = lattice_wave_step(f, 0.7, g, 8);
    f.V = -f.V;
    for (int i = 0; i < 100; ++i) f = lattice_wave_step(f, 0.7, g, 8);
    CHECK((f.X - f0.X).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((f.V + f0.V).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("shadow energy is conserved, plain energy only bounded")
{
    const ChainGeometry g = ChainGeometry::natural(32, 8, 8);
    std::mt19937_64 rng(10);
    std::normal_distribution<double> nd;
    Eigen::VectorXd X(32), V(32);
    for (long i = 0; i < 32; ++i) {
        X[i] = nd(rng);
        V[i] = nd(rng);
    }
    WaveField f = WaveField::make(X, V, g);
    const double dt = 1.5;
    const double s0 = lattice_shadow_energy(f, dt, g, 8), e0 = lattice_energy(f, g, 8);
    double es = 0.0, ee = 0.0;
    for (int i = 0; i < 500; ++i) {
        f = lattice_wave_step(f, dt, g, 8);
        es = std::max(es, std::abs(lattice_shadow_energy(f, dt, g, 8) - s0) / s0);
        ee = std::max(ee, std::abs(lattice_energy(f, g, 8) - e0) / e0);
    }
    CHECK(es < 1e-12);
    CHECK(ee < 0.5);
}

TEST_CASE("CFL violation is refused")
{
    const ChainGeometry g = ChainGeometry::natural(32, 8, 8);
    const WaveField f = WaveField::make(mode(32, 1), Eigen::VectorXd::Zero(32), g);
    CHECK_THROWS_AS(lattice_wave_step(f, 8.5, g, 8), config_error);
}

TEST_CASE("lattice frequency matches the dispersion relation")
{
    const ChainGeometry g = ChainGeometry::natural(64, 8, 8);
    for (long L : {1L, 2L, 5L})
        for (double dt : {0.25, 1.0, 2.0}) {
            const DispersionMeasurement m = measure_dispersion(L, g, 8, dt, 64);
            CHECK(m.scheme_error < 1e-6);
            CHECK(m.lattice == doctest::Approx(2.0 / 8.0 * std::sin(oracle::pi * double(L) / 64.0)));
            // gap to the chain frequency bounded by the Taylor and integrator terms
            CHECK(m.chain_error <= 1.2 * m.chain_bound);
        }
}

TEST_CASE("continuum solution: standing, travelling, zero")
{
    const long n = 64;
    const double Lam = 10.0, c = 1.7, t = 2.3;
    Eigen::VectorXd x(n), X0(n), V0 = Eigen::VectorXd::Zero(n);
    for (long i = 0; i < n; ++i) {
        x[i] = Lam * double(i) / double(n);
        X0[i] = std::sin(2.0 * oracle::pi * x[i] / Lam);
    }
    const Eigen::VectorXd S = continuum_solution(X0, V0, t, c, Lam);
    CHECK((S - std::cos(2.0 * oracle::pi * c * t / Lam) * X0).cwiseAbs().maxCoeff() < 1e-13);

    // smooth periodic pulse moving right: V = -c X'
    auto pulse = [&](double s) { return std::exp(3.0 * std::cos(2.0 * oracle::pi * s / Lam)); };
    auto dpulse = [&](double s) {
        return -3.0 * 2.0 * oracle::pi / Lam * std::sin(2.0 * oracle::pi * s / Lam) * pulse(s);
    };
    Eigen::VectorXd P(n), PV(n), P1(n);
    for (long i = 0; i < n; ++i) {
        P[i] = pulse(x[i]);
        PV[i] = -c * dpulse(x[i]);
        P1[i] = pulse(x[i] - c * t);
    }
    CHECK((continuum_solution(P, PV, t, c, Lam) - P1).cwiseAbs().maxCoeff() < 1e-10);

    CHECK(continuum_solution(Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n), t, c, Lam).norm() == 0.0);
}

TEST_CASE("continuum limit converges at second order")
{
    for (auto route : {ConvergenceRoute::chain, ConvergenceRoute::lattice}) {
        const ConvergenceTable t = convergence_study(2, {16, 32, 64, 128}, 8, route);
        REQUIRE(t.rows.size() == 4);
        CHECK(t.fitted_slope == doctest::Approx(-2.0).epsilon(0.1));
        for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i].sup_error < t.rows[i - 1].sup_error);
    }
    // the chain frequency sits below the linear dispersion by the Taylor remainder
    for (long M : {16L, 64L}) {
        const double x = oracle::pi * 2.0 / (double(M) * 8.0);
        const double Om = 2.0 * std::sin(x), lin = 2.0 * x;
        CHECK(std::abs(Om - lin) / Om <= x * x / 6.0 * 1.01);
    }
}

TEST_CASE("log-log slope")
{
    CHECK(loglog_slope({1.0, 2.0, 4.0}, {1.0, 0.25, 0.0625}) == doctest::Approx(-2.0));
}

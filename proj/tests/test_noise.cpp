#include "oracles.hpp"

#include "hcg/decoherence.hpp"
#include "hcg/noise.hpp"
#include "hcg/parallel.hpp"

#include <doctest.h>

using namespace hcg;

namespace {

struct Case {
    BlockSystem b;
    SpectralData s;
};

Case make(long L, long d, long M = 16)
{
    Case c{build_blocks(build_mode_basis(L, M, d)), {}};
    c.s = effective_frequency(c.b);
    return c;
}

// dense reference for kT (X)^dagger V^{-1} X' + kT (Y)^dagger M^{-1} Y'
double corr_dense(double t, double tp, const BlockSystem& b, double kT)
{
    const long n = b.env_size();
    Eigen::VectorXcd x(n), xp(n), y(n), yp(n);
    for (long i = 0; i < n; ++i) {
        const double w = b.omega[i], W = b.omega0 * b.omega0 - w * w;
        const cd u = std::conj(b.c[i]);
        x[i] = W * std::cos(w * t) * u;
        xp[i] = W * std::cos(w * tp) * u;
        y[i] = W * std::sin(w * t) / w * u;
        yp[i] = W * std::sin(w * tp) / w * u;
    }
    const Eigen::MatrixXcd V = b.V_TT.dense(), M = b.M_TT.dense();
    return kT * (x.dot(V.lu().solve(xp)) + y.dot(M.lu().solve(yp))).real();
}

} // namespace

TEST_CASE("simple noise: trivial cases")
{
    const Case c = make(2, 4);
    NoiseRealization zero{Eigen::VectorXcd::Zero(3), Eigen::VectorXcd::Zero(3)};
    for (double t : {0.0, 1.3, 20.0}) {
        CHECK(noise_simple(t, zero, c.b) == cd(0.0));
        CHECK(noise_lagrangian(t, zero, c.b, c.s) == cd(0.0));
    }
    std::mt19937_64 rng(4);
    const NoiseRealization r = draw_thermal(c.b, 1.0, rng);
    cd ref = 0.0;
    for (long i = 0; i < 3; ++i) ref += c.b.c[i] * (c.b.omega0 * c.b.omega0 - c.b.omega[i] * c.b.omega[i]) * r.dq[i];
    CHECK(std::abs(noise_simple(0.0, r, c.b) - ref) < 1e-14);
    // Lagrangian form at t = 0: K c W dq
    CHECK(std::abs(noise_lagrangian(0.0, r, c.b, c.s) - reduced_forms(c.b).kinetic * ref) < 1e-12);

    const BlockSystem one = build_blocks(build_mode_basis(2, 16, 1));
    NoiseRealization empty{Eigen::VectorXcd(0), Eigen::VectorXcd(0)};
    CHECK(noise_simple(3.0, empty, one) == cd(0.0));
    CHECK(corr_simple(1.0, 2.0, one, 1.0) == 0.0);
    CHECK_THROWS(noise_simple(0.0, zero, one));
}

TEST_CASE("correlation functions: symmetry and dense reference")
{
    for (auto [L, d] : std::vector<std::pair<long, long>>{{1, 2}, {2, 4}, {4, 8}, {3, 5}}) {
        const Case c = make(L, d);
        for (auto [t, tp] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {0.3, 2.9}, {7.1, 1.2}}) {
            CHECK(corr_simple(t, tp, c.b, 1.3) == doctest::Approx(corr_simple(tp, t, c.b, 1.3)).epsilon(1e-12));
            CHECK(corr_simple(t, tp, c.b, 1.3) == doctest::Approx(corr_dense(t, tp, c.b, 1.3)).epsilon(1e-11));
            CHECK(corr_lagrangian(t, tp, c.b, c.s, 1.0) == doctest::Approx(corr_lagrangian(tp, t, c.b, c.s, 1.0)));
        }
        // t = t' = 0 by direct matrix functions: K^2 kT (W u)^dagger M^{-1/2} Omega^{-2} M^{-1/2} (W u)
        const Eigen::MatrixXcd Ri = oracle::hermitian_function(c.b.M_TT.dense(), [](double x) { return 1.0 / std::sqrt(x); });
        const Eigen::MatrixXcd O2inv = effective_frequency_matrix(c.b).inverse();
        const Eigen::VectorXcd Wu = (c.b.weights().cast<cd>().array() * c.b.u().array()).matrix();
        const double K = reduced_forms(c.b).kinetic;
        const double ref = K * K * Wu.dot(Ri * O2inv * Ri * Wu).real();
        CHECK(corr_lagrangian(0.0, 0.0, c.b, c.s, 1.0) == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("Lagrangian correlation is a valid covariance")
{
    const Case c = make(2, 8);
    const long n = 40;
    Eigen::MatrixXd G(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) G(i, j) = corr_lagrangian(0.37 * i, 0.37 * j, c.b, c.s, 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
    CHECK(es.eigenvalues().minCoeff() > -1e-10 * G.norm());
}

TEST_CASE("Monte Carlo: thermal draws reproduce both correlation functions")
{
    const Case c = make(2, 4);
    const long samples = 10000;
    const double kT = 1.0, t = 0.8, tp = 3.1;
    std::vector<double> simple(samples), lag(samples);
    for (long i = 0; i < samples; ++i) {
        auto rng = sample_stream(99, i);
        const NoiseRealization r = draw_thermal(c.b, kT, rng);
        simple[i] = (noise_simple(t, r, c.b) * std::conj(noise_simple(tp, r, c.b))).real();
        const LagrangianNoise f(c.b, c.s, r);
        lag[i] = (f(t) * std::conj(f(tp))).real();
    }
    const Moments ms = moments(simple), ml = moments(lag);
    CHECK(std::abs(ms.mean - corr_simple(t, tp, c.b, kT)) < 3.0 * ms.standard_error);
    CHECK(std::abs(ml.mean - corr_lagrangian(t, tp, c.b, c.s, kT)) < 3.0 * ml.standard_error);
}

TEST_CASE("thermal draw covariance")
{
    const Case c = make(1, 3);
    const long samples = 20000;
    Eigen::MatrixXcd Cq = Eigen::MatrixXcd::Zero(2, 2);
    for (long i = 0; i < samples; ++i) {
        auto rng = sample_stream(7, i);
        const NoiseRealization r = draw_thermal(c.b, 2.0, rng);
        Cq += r.dq * r.dq.adjoint();
    }
    Cq /= double(samples);
    const Eigen::MatrixXcd ref = 2.0 * c.b.V_TT.dense().inverse();
    CHECK((Cq - ref).norm() < 0.05 * ref.norm());
}

TEST_CASE("noise strength: trivial and closed-form values")
{
    CHECK(noise_strength(30, 1, 630).S2 == 0.0);
    const auto [a, b] = asymptotic_estimates(30, 7, 630);
    CHECK(a == doctest::Approx(std::pow(oracle::pi / 21.0, 2)));
    CHECK(b == doctest::Approx(a / 7.0));
    CHECK(asymptotic_estimates(0, 5, 630).first == 0.0);
    CHECK(asymptotic_estimates(100, 100, 630).second == doctest::Approx(std::pow(10.0 * oracle::pi / 63.0, 2) / 100.0));
}

TEST_CASE("noise strength against dense time average")
{
    // the diagonal time average of corr_simple(t, t) is what S^2 measures
    for (auto [L, d] : std::vector<std::pair<long, long>>{{30, 2}, {30, 5}, {65, 12}}) {
        const BlockSystem b = build_blocks(build_mode_basis(L, 630, d));
        const Eigen::MatrixXcd Vi = b.V_TT.dense().inverse(), Mi = b.M_TT.dense().inverse();
        const Eigen::VectorXcd u = b.u();
        double s = 0.0;
        for (long i = 0; i < d - 1; ++i) {
            const double W = b.omega0 * b.omega0 - b.omega[i] * b.omega[i];
            s += std::norm(u[i]) * W * W * 0.5 * (Vi(i, i).real() + Mi(i, i).real() / (b.omega[i] * b.omega[i]));
        }
        CHECK(noise_strength(L, d, 630).S2 == doctest::Approx(s).epsilon(1e-11));

        // with all cross terms (no degeneracies for these d) the exact average matches the long-time mean
        const NoiseSpectrum ex = noise_strength(L, d, 630, TimeAverage::exact);
        CHECK(ex.S2 == doctest::Approx(s).epsilon(1e-11));
    }
}

TEST_CASE("noise strength: d = 2 against the small-L estimate")
{
    const double S2 = noise_strength(30, 2, 630).S2;
    CHECK(std::abs(S2 / std::pow(oracle::pi / 21.0, 2) - 1.0) < 0.10);
}

TEST_CASE("noise strength falls like 1/d at large d")
{
    const double a = noise_strength(30, 2048, 630).S2 * 2048.0;
    const double b = noise_strength(30, 4096, 630).S2 * 4096.0;
    CHECK(std::abs(a / b - 1.0) < 1e-3);
}

TEST_CASE("noise strength: unit-factor variant")
{
    const NoiseSpectrum s = noise_strength(30, 6, 630, TimeAverage::unit_factor);
    const BlockSystem b = build_blocks(build_mode_basis(30, 630, 6));
    double ref = 0.0;
    for (long i = 0; i < 5; ++i) {
        const double W = b.omega0 * b.omega0 - b.omega[i] * b.omega[i];
        ref += std::norm(b.c[i]) * W * W / (b.omega[i] * b.omega[i]);
    }
    CHECK(s.S2 == doctest::Approx(ref));
}

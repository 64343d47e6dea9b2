#include "oracles.hpp"

#include "hcg/verify.hpp"

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

} // namespace

TEST_CASE("block identities hold on the grid and fail under corruption")
{
    for (long L : {1L, 30L, 315L})
        for (long d : {2L, 3L, 8L, 64L}) {
            const VerifyReport r = check_appendix_b(L, d, 630);
            CHECK(r.all_pass());
            CHECK(r.max_residual("B6_constant") < 1e-12);
        }
    CHECK_FALSE(check_appendix_b(30, 8, 630, 1e-10, 1e-3).all_pass());
}

TEST_CASE("transform kernel: zero diagonal, homogeneous solve")
{
    const Case c = make(2, 8);
    const TransformKernel k = build_transform(c.b, c.s, uniform_grid(10.0, 200));
    for (long i = 0; i < long(k.times.size()); ++i) CHECK(k.G(i, i) == 0.0);
    CHECK(k(0.0) == 0.0);
    CHECK(k.max_imag < 1e-12);
    const Eigen::VectorXcd y = k.solve(Eigen::VectorXcd::Zero(k.times.size()));
    CHECK(y.norm() == 0.0);
    // solve inverts the trapezoid operator
    std::mt19937_64 rng(3);
    std::normal_distribution<double> nd;
    Eigen::VectorXcd x(k.times.size());
    for (auto& v : x) v = cd(nd(rng), nd(rng));
    CHECK((k.apply(k.solve(x)) - x).norm() < 1e-10 * x.norm());
}

TEST_CASE("transform kernel: d = 2 closed form")
{
    const Case c = make(1, 2);
    const TransformKernel k = build_transform(c.b, c.s, uniform_grid(5.0, 10));
    const double M = c.b.M_TT.dense()(0, 0).real(), V = c.b.V_TT.dense()(0, 0).real();
    const double nu = std::sqrt(V / M);
    const double W = c.b.omega0 * c.b.omega0 - c.b.omega[0] * c.b.omega[0];
    const double amp = -W * std::norm(c.b.c[0]) / (M * std::norm(c.b.c0));
    for (double tau : {0.3, 1.7, 4.4}) CHECK(k(tau) == doctest::Approx(amp * std::sin(nu * tau) / nu).epsilon(1e-12));
}

TEST_CASE("noise equivalence: zero and random realizations")
{
    const auto times = uniform_grid(10.0, 200);
    const Case c = make(2, 4);
    NoiseRealization zero{Eigen::VectorXcd::Zero(3), Eigen::VectorXcd::Zero(3)};
    const TransformKernel k = build_transform(c.b, c.s, times);
    for (double t : {0.0, 3.0}) CHECK(transformed_noise_closed_form(t, k, zero, c.b) == cd(0.0));

    for (long d : {2L, 4L, 8L}) {
        const Case cd_ = make(4, d);
        std::mt19937_64 rng(d);
        const NoiseRealization r = draw_thermal(cd_.b, 1.0, rng);
        const EquivalenceResult e = check_noise_equivalence(cd_.b, cd_.s, r, times);
        CHECK(e.closed_form_residual < 1e-8);
        REQUIRE(e.observed_order.size() >= 1);
        for (double o : e.observed_order) CHECK(o == doctest::Approx(2.0).epsilon(0.15));
    }
}

TEST_CASE("resolvent identities and eigen relations")
{
    for (auto [L, d] : std::vector<std::pair<long, long>>{{1, 2}, {2, 4}, {4, 8}, {30, 9}}) {
        const Case c = make(L, d, 630);
        std::mt19937_64 rng(L + d);
        const NoiseRealization r = draw_thermal(c.b, 1.0, rng);
        CHECK(check_c11(c.b, c.s, r.dq).all_pass());
        CHECK(check_eigen_relations(c.b, c.s).all_pass());
    }
    // M u = mu (1 + |u|^2/|c0|^2) u, checked by hand
    const Case c = make(3, 6);
    const Eigen::VectorXcd u = c.b.u();
    const Eigen::VectorXcd Mu = c.b.M_TT.dense() * u;
    CHECK((Mu - (1.0 + u.squaredNorm() / std::norm(c.b.c0)) * u).norm() < 1e-13);
}

TEST_CASE("quadratic forms: equality, homogeneous solutions, scaling")
{
    const Case c = make(2, 4);
    const auto times = uniform_grid(20.0, 100);
    SmoothTrajectory A{{0.7, -0.3, 0.2}, {0.4, 1.1, 0.15}, {0.0, 1.0, 2.0}};
    const QuadraticFormResult q = check_quadratic_form_equality(c.b, c.s, A, times);
    CHECK_FALSE(q.inconclusive);
    CHECK(q.relative_difference < 1e-6);

    SmoothTrajectory A2 = A;
    for (auto& a : A2.amplitude) a *= 3.0;
    const QuadraticFormResult q2 = check_quadratic_form_equality(c.b, c.s, A2, times, 1.0, false);
    CHECK(q2.simple == doctest::Approx(9.0 * q.simple).epsilon(1e-8));
    CHECK(q2.transformed == doctest::Approx(9.0 * q.transformed).epsilon(1e-8));

    // exact free motion at Omega_L: the residual vanishes
    SmoothTrajectory free{{1.0}, {c.b.omega0}, {0.3}};
    const QuadraticFormResult z = check_quadratic_form_equality(c.b, c.s, free, times, 1.0, false);
    CHECK(std::abs(z.simple) < 1e-12 * q.simple);
    CHECK(std::abs(z.transformed) < 1e-12 * q.simple);
}

TEST_CASE("suite with a corrupted coefficient fails")
{
    SuiteOptions o;
    o.realizations = 2;
    o.L_b = {30};
    o.d_b = {8};
    o.L_c = {2};
    o.d_c = {4};
    CHECK(run_verification_suite(o).all_pass());
    o.corruption = 1e-3;
    CHECK_FALSE(run_verification_suite(o).all_pass());
}

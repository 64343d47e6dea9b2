#include "hcg/decoherence.hpp"
#include "hcg/errors.hpp"

#include <cmath>

namespace hcg {

double kernel(double t, double tp, const LagrangianCoefficients& k)
{
    double acc = 0.0;
    for (long i = 0; i < k.a.size(); ++i) {
        const double nu = k.nu[i];
        const double trig = std::cos(nu * t) * std::cos(nu * tp) + std::sin(nu * t) * std::sin(nu * tp);
        acc += std::norm(k.a[i]) * trig / (nu * nu);
    }
    // K^2 = 1 once mu and sum |c|^2 are scaled out
    return k.K * k.K * acc;
}

double kernel(double t, double tp, const BlockSystem& b, const SpectralData& s)
{
    return kernel(t, tp, lagrangian_coefficients(b, s));
}

double kernel_unit(const ChainGeometry& g)
{
    return double(g.group_size) * g.kT() * g.mass * g.omega * g.omega / (4.0 * g.hbar * g.hbar);
}

double trace_measure(const BlockSystem& b)
{
    if (b.env_size() == 0) return 0.0;
    const Eigen::VectorXcd x = (b.weights().cast<cd>().array() * b.u().array()).matrix();
    const double K = reduced_forms(b).kinetic;
    return K * K * x.dot(b.V_TT.solve(x)).real();
}

double trace_measure(long L, long d, long groups)
{
    const ModeBasis basis = build_mode_basis(L, groups, d);
    if (d == 1) return 0.0;
    return trace_measure(build_blocks(basis));
}

DecoherenceReport predictability_report(const ChainGeometry& g, const CoarseGrainingSpec& spec, long L, long d,
                                        double excitation_scale, double horizon, long mode_limit)
{
    if (L < 1 || 2 * L > g.groups) throw contract_error("predictability_report: need 1 <= L <= M/2");
    if (d < 1) throw contract_error("predictability_report: d must be positive");
    if (!(excitation_scale > 0.0 && horizon > 0.0))
        throw contract_error("predictability_report: excitation scale and horizon must be positive");
    if (!(g.mass > 0 && g.omega > 0 && g.temperature > 0 && g.hbar > 0 && g.k_B > 0 && g.group_size > 0))
        throw contract_error("predictability_report: physical parameters must be positive");
    if (!(spec.range_width > 0)) throw contract_error("predictability_report: range width must be positive");

    DecoherenceReport r;
    r.L = L;
    r.d = d;
    const double kT = g.kT();
    const double N = double(g.group_size);
    const double ML = double(g.groups) / double(L);

    r.t_dyn = double(d) / g.omega * ML;
    r.F_noise = std::sqrt(kT * g.omega * g.omega * g.mass) * std::sqrt(N / double(d)) / ML;
    r.t_decoh = g.hbar / (r.F_noise * spec.range_width);
    r.ratio_decoh_dyn = r.t_decoh / r.t_dyn;
    r.lambda_DB = g.hbar / std::sqrt(kT * g.mass);
    r.F_dyn = N * g.mass * excitation_scale / (r.t_dyn * r.t_dyn);
    r.noise_force_ratio = r.F_noise / r.F_dyn;
    const double Omega = 2.0 * g.omega * std::sin(pi * double(L) / (double(g.groups) * double(d)));
    r.thermal_scale = std::sqrt(kT / (N * g.mass * Omega * Omega));
    r.op_count = double(L) * g.omega * horizon / double(d);

    if (d > 1 && d <= mode_limit) {
        r.kernel_trace = trace_measure(L, d, g.groups);
        const double S2 = noise_strength(L, d, g.groups).S2;
        r.classical_ratio = S2 > 0.0 ? r.kernel_trace / S2 : 0.0;
    }
    return r;
}

} // namespace hcg

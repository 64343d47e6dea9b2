#pragma once

#include "hcg/geometry.hpp"

#include <Eigen/Dense>
#include <vector>

namespace hcg {

// 2 omega sin(pi l / script N)
double fine_mode_frequency(long ell, const ChainGeometry& g);

// m(k) = L + k M/2 (k even), -L + (k+1) M/2 (k odd)
long index_map(long L, long k, long groups);

// Coefficients of one coarse mode in terms of its d fine modes. Everything
// here depends on (M, L, d) only; N enters through unit conversions.
struct ModeBasis {
    long L = 0;
    long groups = 0;
    long d = 1;
    std::vector<long> m;     // index map, fine mode l(k) = m(k) N / d
    Eigen::VectorXcd c;      // scaled coefficients sqrt(N) c_Lk
    Eigen::VectorXd theta;   // pi m(k) / (M d); fine frequency is 2 sin(theta)
    Eigen::VectorXd w;       // fine frequencies in units of omega
    double Omega = 0.0;      // w[0]
    double phase = 0.0;      // phi(d)
};

ModeBasis build_mode_basis(long L, long groups, long d);
ModeBasis build_mode_basis(long L, const ChainGeometry& g);

// group averages X_J of atom displacements x_j (length script N -> M)
Eigen::VectorXd project_to_coarse(const Eigen::VectorXd& x, const ChainGeometry& g);

// X_J = sum_L [A_L F_L(J) + c.c.], A indexed L = 0..M/2
Eigen::VectorXd synthesize_from_modes(const Eigen::VectorXcd& A, long groups);
// inverse of the above; A_0 and A_{M/2} come back real
Eigen::VectorXcd decompose_to_modes(const Eigen::VectorXd& X);

// x_j = sum_l [a_l f_l(j) + c.c.], a indexed l = 0..script N/2
Eigen::VectorXd synthesize_atoms(const Eigen::VectorXcd& a, long total_atoms);

// Exact linear map from fine amplitudes to the coarse amplitude A_L, one term
// per distinct contributing fine mode n. With gamma_n the group-average
// factor, the term adds gamma a_n, conj(gamma a_n), or Re(gamma a_n).
struct ProjectionTerm {
    enum Kind { direct, conjugate, real_part };
    long n = 0;
    long m = 0;
    cd gamma;
    Kind kind = direct;
};
std::vector<ProjectionTerm> coarse_projection(long L, const ChainGeometry& g);
cd apply_projection(const std::vector<ProjectionTerm>& terms, const Eigen::VectorXcd& a);

} // namespace hcg

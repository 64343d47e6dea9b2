#pragma once

#include <complex>

namespace hcg {

using cd = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

namespace si {
// CODATA 2018 exact / recommended values
inline constexpr double hbar = 1.054571817e-34;   // J s
inline constexpr double k_B = 1.380649e-23;      // J/K
inline constexpr double amu = 1.66053906660e-27;  // kg
} // namespace si

// One member of the coarse-graining family. Natural units by default
// (mass = omega = k_B T = hbar = 1).
struct ChainGeometry {
    long total_atoms = 0;   // script N = groups * group_size
    long groups = 0;        // script M, even
    long group_size = 0;    // N
    long clump_size = 1;    // d, divides N
    double mass = 1.0;
    double omega = 1.0;
    double spacing = 1.0;
    double temperature = 1.0;
    double hbar = 1.0;
    double k_B = 1.0;

    static ChainGeometry natural(long groups, long group_size, long clump_size);

    double kT() const { return k_B * temperature; }
    void validate() const;
};

struct CoarseGrainingSpec {
    double range_width = 1.0;   // Delta
    double time_step = 1.0;     // Delta t
    long cutoff_mode = 0;       // l_C
    void validate(const ChainGeometry& g) const;
};

} // namespace hcg

#pragma once

#include "hcg/noise.hpp"

#include <string>
#include <vector>

namespace hcg {

// one point of the S^2(d) curves
struct Fig3Row {
    long L = 0, d = 1;
    double S2 = 0.0;                 // selected time average
    double S2_unit_factor = 0.0;     // filled when requested
    double d2_asymptote = 0.0;       // (pi L/M)^2
    double large_d_asymptote = 0.0;  // (pi L/M)^2 / d
};

std::vector<Fig3Row> fig3_rows(long groups, const std::vector<long>& Ls, const std::vector<long>& ds,
                               TimeAverage mode, bool with_unit_factor, unsigned workers);

struct Fig4Row {
    long L = 0, d = 1;
    double K_I = 0.0;   // units N kT mu w^2 / (4 hbar^2)
    double S2 = 0.0;    // units kT w^2 / (N mu)
    double ratio = 0.0; // K_I / S2, zero when undefined
};

std::vector<Fig4Row> fig4_rows(long groups, const std::vector<long>& Ls, const std::vector<long>& ds, unsigned workers);

struct CurveCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// d = 1 zero, ordering by L, large-d and d = 2 asymptotes
std::vector<CurveCheck> fig3_checks(const std::vector<Fig3Row>& rows);

} // namespace hcg

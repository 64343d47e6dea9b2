#include "hcg/sweeps.hpp"
#include "hcg/decoherence.hpp"
#include "hcg/parallel.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace hcg {

std::vector<Fig3Row> fig3_rows(long groups, const std::vector<long>& Ls, const std::vector<long>& ds,
                               TimeAverage mode, bool with_unit_factor, unsigned workers)
{
    std::vector<Fig3Row> rows(Ls.size() * ds.size());
    parallel_for(long(rows.size()), workers, [&](long i) {
        Fig3Row& r = rows[i];
        r.L = Ls[i / ds.size()];
        r.d = ds[i % ds.size()];
        r.S2 = noise_strength(r.L, r.d, groups, mode).S2;
        if (with_unit_factor) r.S2_unit_factor = noise_strength(r.L, r.d, groups, TimeAverage::unit_factor).S2;
        const auto [a, b] = asymptotic_estimates(r.L, r.d, groups);
        r.d2_asymptote = a;
        r.large_d_asymptote = b;
    });
    return rows;
}

std::vector<Fig4Row> fig4_rows(long groups, const std::vector<long>& Ls, const std::vector<long>& ds, unsigned workers)
{
    std::vector<Fig4Row> rows(Ls.size() * ds.size());
    parallel_for(long(rows.size()), workers, [&](long i) {
        Fig4Row& r = rows[i];
        r.L = Ls[i / ds.size()];
        r.d = ds[i % ds.size()];
        r.K_I = trace_measure(r.L, r.d, groups);
        r.S2 = noise_strength(r.L, r.d, groups).S2;
        r.ratio = r.S2 > 0.0 ? r.K_I / r.S2 : 0.0;
    });
    return rows;
}

std::vector<CurveCheck> fig3_checks(const std::vector<Fig3Row>& rows)
{
    std::vector<CurveCheck> out;
    std::map<long, std::map<long, const Fig3Row*>> by_L;
    for (const auto& r : rows) by_L[r.L][r.d] = &r;

    {
        CurveCheck c{"S2(d=1) = 0", true, ""};
        for (const auto& [L, m] : by_L)
            if (m.count(1) && m.at(1)->S2 != 0.0) {
                c.pass = false;
                c.detail += "L=" + std::to_string(L) + " ";
            }
        if (c.detail.empty()) c.detail = "exact zero";
        out.push_back(c);
    }
    {
        CurveCheck c{"curves ordered by L", true, ""};
        long bad = 0;
        for (auto it = by_L.begin(); it != by_L.end(); ++it) {
            auto nx = std::next(it);
            if (nx == by_L.end()) break;
            for (const auto& [d, r] : it->second) {
                if (d == 1 || !nx->second.count(d)) continue;
                if (!(nx->second.at(d)->S2 > r->S2)) ++bad;
            }
        }
        c.pass = bad == 0;
        c.detail = std::to_string(bad) + " out-of-order points";
        out.push_back(c);
    }
    {
        CurveCheck c{"S2 d -> (pi L/M)^2 for d >= 1000 (15%)", true, ""};
        std::ostringstream os;
        double worst = 0.0;
        bool any = false;
        for (const auto& [L, m] : by_L)
            for (const auto& [d, r] : m) {
                if (d < 1000 || L == 0) continue;
                any = true;
                const double rel = std::abs(r->S2 * double(d) / r->d2_asymptote - 1.0);
                worst = std::max(worst, rel);
            }
        c.pass = any && worst <= 0.15;
        os << "max relative deviation " << worst;
        c.detail = os.str();
        out.push_back(c);
    }
    {
        CurveCheck c{"S2(d=2) vs (pi L/M)^2 (10%)", true, ""};
        std::ostringstream os;
        double worst = 0.0;
        bool any = false;
        for (const auto& [L, m] : by_L) {
            if (!m.count(2) || L == 0) continue;
            any = true;
            worst = std::max(worst, std::abs(m.at(2)->S2 / m.at(2)->d2_asymptote - 1.0));
        }
        c.pass = any && worst <= 0.10;
        os << "max relative deviation " << worst;
        c.detail = os.str();
        out.push_back(c);
    }
    return out;
}

} // namespace hcg

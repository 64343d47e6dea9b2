#include "hcg/geometry.hpp"
#include "hcg/errors.hpp"

#include <string>

namespace hcg {

ChainGeometry ChainGeometry::natural(long groups, long group_size, long clump_size)
{
    ChainGeometry g;
    g.groups = groups;
    g.group_size = group_size;
    g.clump_size = clump_size;
    g.total_atoms = groups * group_size;
    g.validate();
    return g;
}

void ChainGeometry::validate() const
{
    if (groups <= 0 || group_size <= 0 || clump_size <= 0)
        throw contract_error("geometry: groups, group size and clump size must be positive");
    if (groups % 2 != 0)
        throw contract_error("geometry: number of groups must be even, got " + std::to_string(groups));
    if (group_size % clump_size != 0)
        throw contract_error("geometry: clump size " + std::to_string(clump_size) +
                             " does not divide group size " + std::to_string(group_size));
    if (total_atoms != groups * group_size)
        throw contract_error("geometry: total atoms must equal groups * group size");
    if (!(mass > 0 && omega > 0 && spacing > 0 && temperature > 0 && hbar > 0 && k_B > 0))
        throw contract_error("geometry: physical constants must be positive");
}

void CoarseGrainingSpec::validate(const ChainGeometry& g) const
{
    if (!(range_width > 0 && time_step > 0))
        throw contract_error("coarse-graining: range width and time step must be positive");
    if (cutoff_mode < 0 || 2 * cutoff_mode > g.total_atoms)
        throw contract_error("coarse-graining: cutoff mode out of range");
}

} // namespace hcg

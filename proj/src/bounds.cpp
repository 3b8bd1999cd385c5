#include "zsf/bounds.hpp"

#include <string>

namespace zsf {

BoundReport pair_counting_bound(const GroupParams& params) {
    BoundReport report;
    report.group_order = params.order();
    if (params.modulus() == 4) {
        report.upper_bound = params.order() / 2;
        report.achieved_by_construction = true;
        report.heuristic = false;
    } else {
        report.upper_bound = (params.order() + 1) / 2;
        report.achieved_by_construction = false;
        report.heuristic = true;
    }
    return report;
}

GapReport gap_to_bound(const VectorSet& set) {
    const BoundReport bound = pair_counting_bound(set.params());
    const std::int64_t gap =
        static_cast<std::int64_t>(bound.upper_bound) - static_cast<std::int64_t>(set.size());
    if (gap < 0 && !bound.heuristic) {
        throw InconsistencyError("set of size " + std::to_string(set.size()) +
                                 " exceeds the proven bound " + std::to_string(bound.upper_bound) +
                                 "; the verifier that admitted it is broken");
    }
    GapReport report;
    report.gap = gap;
    report.density_shortfall =
        make_density(gap < 0 ? 0 : static_cast<std::uint64_t>(gap), set.params().order());
    return report;
}

} // namespace zsf

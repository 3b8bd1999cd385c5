#pragma once

#include <cstdint>

#include "zsf/constructions.hpp"
#include "zsf/vector_set.hpp"

namespace zsf {

/// Pair-counting upper bound on a 3-zero-sum-free subset. For m = 4 the value
/// m^n/2 is exact and attained by the odd-first-coordinate family; for other
/// moduli the same counting gives floor((m^n+1)/2) but is reported as a
/// heuristic estimate only.
struct BoundReport {
    std::uint64_t group_order = 0;
    std::uint64_t upper_bound = 0;
    bool achieved_by_construction = false;
    /// True when the value is not authoritative for this modulus.
    bool heuristic = false;
};

BoundReport pair_counting_bound(const GroupParams& params);

struct GapReport {
    /// upper_bound - |H|.
    std::int64_t gap = 0;
    Density density_shortfall;
};

/// Distance of a (verified-free; not re-verified here) set from the bound.
/// Throws InconsistencyError if |H| exceeds the proven m = 4 bound, which
/// would mean a broken verifier upstream.
GapReport gap_to_bound(const VectorSet& set);

} // namespace zsf

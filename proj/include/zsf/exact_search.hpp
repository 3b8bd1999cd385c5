#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "zsf/vector_set.hpp"

namespace zsf {

enum class ExactStatus { proven_optimal, node_limit_reached };

std::string exact_status_name(ExactStatus status);

struct ExactResult {
    std::uint64_t max_size = 0;
    VectorSet witness_set;
    std::uint64_t nodes_explored = 0;
    ExactStatus status = ExactStatus::proven_optimal;
};

/// True maximum by sweeping all 2^(m^n) subsets. A subset is free iff its
/// lowest member completes no zero-sum triple inside it and the rest is free,
/// so the sweep runs on a bit per subset. Guarded to m^n <= 20.
ExactResult exhaustive_max(const GroupParams& params);

inline constexpr std::uint64_t kExhaustiveMaxOrder = 20;

/// Depth-first include/exclude over codes in ascending order, feasibility
/// kept incrementally by the blocked table. Prunes on the remaining-unblocked
/// count; for m = 4 the search is seeded with the odd-first-coordinate set so
/// it starts at the proven optimum and only has to close the gap to the
/// bound. Guarded to m^n <= 4096.
ExactResult branch_and_bound_max(const GroupParams& params,
                                 std::uint64_t node_limit = UINT64_MAX);

inline constexpr std::uint64_t kBranchAndBoundMaxOrder = 4096;

struct IlpStats {
    std::uint64_t num_variables = 0;
    std::uint64_t num_constraints = 0;
};

/// Writes the maximization as an LP-format text model: one binary variable
/// x<code> per element, objective sum of all variables, and one constraint
/// x_a + x_b + x_c <= 2 per distinct zero-sum triple, emitted in ascending
/// (a, b, c) order. Solving the model is out of scope here; the file feeds
/// any LP-format solver. Guarded to m^n <= 4096.
IlpStats export_ilp(const GroupParams& params, std::ostream& sink);

} // namespace zsf

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zsf/vector_set.hpp"

namespace zsf {

/// A violating triple: three pairwise-distinct members with x + y + z = 0,
/// stored with x.code < y.code < z.code.
struct Witness {
    PackedVector x, y, z;

    /// Re-checks distinctness and the zero sum; the falsification certificate
    /// must survive independent re-summation.
    bool valid(const GroupParams& params) const;

    friend bool operator==(const Witness& a, const Witness& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

Witness make_witness(PackedVector a, PackedVector b, PackedVector c);

struct VerifyResult {
    bool is_free = true;
    std::optional<Witness> witness;
    /// Pairs (or triples, for the naive oracle) examined.
    std::uint64_t pairs_checked = 0;
    double elapsed_seconds = 0.0;
};

/// Decides 3-zero-sum-freeness by scanning unordered member pairs {x, y} and
/// testing whether z = -(x + y) completes a distinct in-set triple. The full
/// pair range is always scanned, so the result (including the earliest
/// witness in pair order) is identical for any worker count.
VerifyResult verify_pairwise(const VectorSet& set, unsigned threads = 1);

/// Independent O(|H|^3) oracle over all distinct member triples. Guarded to
/// |H| <= 1000; it exists to cross-check verify_pairwise, not to be fast.
VerifyResult verify_naive_oracle(const VectorSet& set);

/// Number of unordered distinct triples {x, y, z} in H with x + y + z = 0.
/// Each triple is seen from each of its 3 pairs, so this is the pair-scan
/// hit count divided by 3.
std::uint64_t count_violations(const VectorSet& set, unsigned threads = 1);

/// Per-element count of unordered in-set pairs {x, y} with x + y + z = 0 and
/// z distinct from both. A candidate v extends a free set to a free set
/// exactly when its entry is 0. Supports the incremental updates the greedy
/// and branch-and-bound engines live on.
class BlockedTable {
public:
    static constexpr std::uint64_t kMaxEntries = 1ull << 24;

    explicit BlockedTable(const GroupParams& params);

    /// Builds the table for an existing set by direct pair enumeration.
    static BlockedTable build(const VectorSet& set);

    std::uint32_t operator[](PackedVector z) const { return counts_[z.code]; }

    /// Records the pairs {v, x} for every existing member x; call exactly
    /// once per insertion, before or after v joins the member list.
    void on_insert(PackedVector v, const VectorSet& members_without_v);

    /// Reverses on_insert; members_without_v must no longer contain v.
    void on_erase(PackedVector v, const VectorSet& members_without_v);

    const GroupParams& params() const { return params_; }

private:
    void apply(PackedVector v, const VectorSet& others, std::int32_t delta);

    GroupParams params_;
    std::vector<std::uint32_t> counts_;
};

/// A set kept in sync with its blocked table. This is the incremental
/// structure behind greedy construction and branch-and-bound.
class TrackedSet {
public:
    explicit TrackedSet(const GroupParams& params);

    bool insert(PackedVector v);
    bool erase(PackedVector v);

    std::uint32_t blocked(PackedVector v) const { return table_[v]; }
    const VectorSet& set() const { return set_; }
    std::size_t size() const { return set_.size(); }
    const BlockedTable& table() const { return table_; }

private:
    VectorSet set_;
    BlockedTable table_;
};

} // namespace zsf

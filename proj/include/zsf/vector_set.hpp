#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "zsf/group.hpp"

namespace zsf {

/// A candidate subset H of (Z/mZ)^n.
///
/// Iteration order is insertion order (deterministic); membership tests are
/// O(1). Small groups use a flat bit table, larger ones a hash set; the two
/// index kinds behave identically and tests hold them to that.
class VectorSet {
public:
    /// Largest order backed by the flat bit table.
    static constexpr std::uint64_t kBitTableMaxOrder = 1ull << 24;

    enum class IndexPolicy { automatic, force_hash };

    explicit VectorSet(const GroupParams& params, IndexPolicy policy = IndexPolicy::automatic);

    /// Builds a set from codes, rejecting duplicates and out-of-range codes.
    static VectorSet from_codes(const GroupParams& params,
                                const std::vector<std::uint64_t>& codes);

    const GroupParams& params() const noexcept { return params_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    bool contains(PackedVector v) const;

    /// Inserts v; returns false (and leaves the set unchanged) if already present.
    bool insert(PackedVector v);

    /// Removes v, preserving the insertion order of the rest. Returns false
    /// if v was not a member.
    bool erase(PackedVector v);

    /// Members in insertion order.
    const std::vector<PackedVector>& members() const noexcept { return members_; }

    /// Members in ascending code order.
    std::vector<PackedVector> sorted_members() const;

    /// Same group and same membership (insertion order is ignored).
    bool operator==(const VectorSet& other) const;

private:
    void check_range(PackedVector v) const;

    GroupParams params_;
    std::vector<PackedVector> members_;
    bool use_bits_;
    std::vector<std::uint64_t> bits_;
    std::unordered_set<std::uint64_t> hash_;
};

} // namespace zsf

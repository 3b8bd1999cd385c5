#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "zsf/errors.hpp"

namespace zsf {

/// The ambient group (Z/mZ)^n. Immutable; caches the group order and, for
/// m = 4, the lane masks used by the packed fast paths.
class GroupParams {
public:
    /// Largest representable group order. Keeps flat tables addressable and
    /// leaves headroom over anything this toolkit is meant to search.
    static constexpr std::uint64_t kMaxOrder = 1ull << 40;

    GroupParams(std::uint64_t modulus, std::uint32_t dimension);

    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint32_t dimension() const noexcept { return dimension_; }

    /// m^n, the number of group elements.
    std::uint64_t order() const noexcept { return order_; }

    /// m^i for 0 <= i <= n.
    std::uint64_t power(std::uint32_t i) const { return powers_[i]; }

    bool is_mod4() const noexcept { return modulus_ == 4; }

    /// Low bit of every 2-bit lane (m = 4 only), masked to n lanes.
    std::uint64_t lane_lo() const noexcept { return lane_lo_; }
    /// High bit of every 2-bit lane (m = 4 only).
    std::uint64_t lane_hi() const noexcept { return lane_hi_; }
    /// All 2n digit bits (m = 4 only).
    std::uint64_t lane_mask() const noexcept { return lane_lo_ | lane_hi_; }

    bool operator==(const GroupParams& o) const noexcept {
        return modulus_ == o.modulus_ && dimension_ == o.dimension_;
    }

private:
    std::uint64_t modulus_;
    std::uint32_t dimension_;
    std::uint64_t order_;
    std::vector<std::uint64_t> powers_;
    std::uint64_t lane_lo_ = 0;
    std::uint64_t lane_hi_ = 0;
};

/// One element of (Z/mZ)^n, packed as n base-m digits. Coordinate 1 is the
/// least significant digit; the code <-> vector map is a fixed bijection.
struct PackedVector {
    std::uint64_t code = 0;

    constexpr PackedVector() = default;
    constexpr explicit PackedVector(std::uint64_t c) : code(c) {}

    friend constexpr bool operator==(PackedVector a, PackedVector b) { return a.code == b.code; }
    friend constexpr bool operator!=(PackedVector a, PackedVector b) { return a.code != b.code; }
    friend constexpr bool operator<(PackedVector a, PackedVector b) { return a.code < b.code; }
};

/// Packs a coordinate list into a code. Throws InvalidInput on wrong length
/// or out-of-range entries.
PackedVector encode(const std::vector<std::uint32_t>& coords, const GroupParams& params);

/// Unpacks a code into its n coordinates, coordinate 1 first.
std::vector<std::uint32_t> decode(PackedVector v, const GroupParams& params);

inline constexpr PackedVector zero_vector() { return PackedVector{0}; }

/// Coordinate-wise sum mod m.
PackedVector add(PackedVector a, PackedVector b, const GroupParams& params);

/// Coordinate-wise negation: add(a, neg(a)) is the zero vector.
PackedVector neg(PackedVector a, const GroupParams& params);

/// Coordinate i of v without materializing the whole list.
std::uint32_t coordinate(PackedVector v, std::uint32_t i, const GroupParams& params);

/// Number of coordinates equal to 2 (the "2-heaviness" used by search priorities).
std::uint32_t count_twos(PackedVector v, const GroupParams& params);

/// Sum of coordinates mod 2.
std::uint32_t weight_parity(PackedVector v, const GroupParams& params);

/// Ordered stream over all m^n elements, codes ascending. No materialization,
/// so it is usable at any representable order.
class GroupRange {
public:
    explicit GroupRange(const GroupParams& params) : order_(params.order()) {}

    class iterator {
    public:
        using value_type = PackedVector;
        using difference_type = std::int64_t;
        using iterator_category = std::forward_iterator_tag;

        iterator() = default;
        explicit iterator(std::uint64_t code) : code_(code) {}
        PackedVector operator*() const { return PackedVector{code_}; }
        iterator& operator++() { ++code_; return *this; }
        iterator operator++(int) { iterator t = *this; ++code_; return t; }
        friend bool operator==(iterator a, iterator b) { return a.code_ == b.code_; }
        friend bool operator!=(iterator a, iterator b) { return a.code_ != b.code_; }

    private:
        std::uint64_t code_ = 0;
    };

    iterator begin() const { return iterator{0}; }
    iterator end() const { return iterator{order_}; }
    std::uint64_t size() const { return order_; }

private:
    std::uint64_t order_;
};

inline GroupRange enumerate_group(const GroupParams& params) { return GroupRange(params); }

} // namespace zsf

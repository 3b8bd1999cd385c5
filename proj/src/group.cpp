#include "zsf/group.hpp"

#include <string>

namespace zsf {

namespace {

void check_code(PackedVector v, const GroupParams& params) {
    if (v.code >= params.order()) {
        throw InvalidInput("packed code " + std::to_string(v.code) +
                           " out of range for group of order " + std::to_string(params.order()));
    }
}

} // namespace

GroupParams::GroupParams(std::uint64_t modulus, std::uint32_t dimension)
    : modulus_(modulus), dimension_(dimension) {
    if (modulus < 2) throw InvalidInput("modulus must be >= 2");
    if (dimension < 1) throw InvalidInput("dimension must be >= 1");
    powers_.reserve(dimension + 1);
    powers_.push_back(1);
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i < dimension; ++i) {
        if (acc > kMaxOrder / modulus) {
            throw InvalidInput("group order " + std::to_string(modulus) + "^" +
                               std::to_string(dimension) + " exceeds the 2^40 cap");
        }
        acc *= modulus;
        powers_.push_back(acc);
    }
    order_ = acc;
    if (modulus_ == 4) {
        // n two-bit lanes starting at bit 0.
        for (std::uint32_t i = 0; i < dimension; ++i) lane_lo_ |= 1ull << (2 * i);
        lane_hi_ = lane_lo_ << 1;
    }
}

PackedVector encode(const std::vector<std::uint32_t>& coords, const GroupParams& params) {
    if (coords.size() != params.dimension()) {
        throw InvalidInput("expected " + std::to_string(params.dimension()) +
                           " coordinates, got " + std::to_string(coords.size()));
    }
    std::uint64_t code = 0;
    for (std::uint32_t i = params.dimension(); i-- > 0;) {
        if (coords[i] >= params.modulus()) {
            throw InvalidInput("coordinate " + std::to_string(i + 1) + " value " +
                               std::to_string(coords[i]) + " not in [0, " +
                               std::to_string(params.modulus()) + ")");
        }
        code = code * params.modulus() + coords[i];
    }
    return PackedVector{code};
}

std::vector<std::uint32_t> decode(PackedVector v, const GroupParams& params) {
    check_code(v, params);
    std::vector<std::uint32_t> coords(params.dimension());
    std::uint64_t rest = v.code;
    for (std::uint32_t i = 0; i < params.dimension(); ++i) {
        coords[i] = static_cast<std::uint32_t>(rest % params.modulus());
        rest /= params.modulus();
    }
    return coords;
}

PackedVector add(PackedVector a, PackedVector b, const GroupParams& params) {
    check_code(a, params);
    check_code(b, params);
    if (params.is_mod4()) {
        // Lane-parallel add mod 4: low bits add within the lane (at most 1+1,
        // never a carry out), high bits add mod 2 as an xor.
        const std::uint64_t lo = params.lane_lo();
        const std::uint64_t hi = params.lane_hi();
        const std::uint64_t t = (a.code & lo) + (b.code & lo);
        return PackedVector{t ^ ((a.code ^ b.code) & hi)};
    }
    const std::uint64_t m = params.modulus();
    std::uint64_t code = 0;
    std::uint64_t ra = a.code, rb = b.code;
    for (std::uint32_t i = 0; i < params.dimension(); ++i) {
        const std::uint64_t d = (ra % m + rb % m) % m;
        code += d * params.power(i);
        ra /= m;
        rb /= m;
    }
    return PackedVector{code};
}

PackedVector neg(PackedVector a, const GroupParams& params) {
    check_code(a, params);
    if (params.is_mod4()) {
        // Per lane: (4 - d) mod 4 = (d ^ 3) + 1 mod 4.
        const std::uint64_t comp = a.code ^ params.lane_mask();
        const std::uint64_t lo = params.lane_lo();
        const std::uint64_t t = (comp & lo) + lo;
        return PackedVector{t ^ (comp & params.lane_hi())};
    }
    const std::uint64_t m = params.modulus();
    std::uint64_t code = 0;
    std::uint64_t ra = a.code;
    for (std::uint32_t i = 0; i < params.dimension(); ++i) {
        const std::uint64_t d = (m - ra % m) % m;
        code += d * params.power(i);
        ra /= m;
    }
    return PackedVector{code};
}

std::uint32_t coordinate(PackedVector v, std::uint32_t i, const GroupParams& params) {
    check_code(v, params);
    if (i >= params.dimension()) throw InvalidInput("coordinate index out of range");
    return static_cast<std::uint32_t>(v.code / params.power(i) % params.modulus());
}

std::uint32_t count_twos(PackedVector v, const GroupParams& params) {
    check_code(v, params);
    if (params.is_mod4()) {
        // Digit == 2 exactly when the lane bits are (hi=1, lo=0).
        const std::uint64_t twos = (v.code >> 1) & ~v.code & params.lane_lo();
        return static_cast<std::uint32_t>(__builtin_popcountll(twos));
    }
    std::uint32_t count = 0;
    std::uint64_t rest = v.code;
    for (std::uint32_t i = 0; i < params.dimension(); ++i) {
        if (rest % params.modulus() == 2) ++count;
        rest /= params.modulus();
    }
    return count;
}

std::uint32_t weight_parity(PackedVector v, const GroupParams& params) {
    check_code(v, params);
    if (params.is_mod4()) {
        return static_cast<std::uint32_t>(__builtin_popcountll(v.code & params.lane_lo()) & 1);
    }
    std::uint64_t sum = 0;
    std::uint64_t rest = v.code;
    for (std::uint32_t i = 0; i < params.dimension(); ++i) {
        sum += rest % params.modulus();
        rest /= params.modulus();
    }
    return static_cast<std::uint32_t>(sum & 1);
}

} // namespace zsf

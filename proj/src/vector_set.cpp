#include "zsf/vector_set.hpp"

#include <algorithm>
#include <string>

namespace zsf {

VectorSet::VectorSet(const GroupParams& params, IndexPolicy policy)
    : params_(params),
      use_bits_(policy == IndexPolicy::automatic && params.order() <= kBitTableMaxOrder) {
    if (use_bits_) bits_.assign((params.order() + 63) / 64, 0);
}

VectorSet VectorSet::from_codes(const GroupParams& params,
                                const std::vector<std::uint64_t>& codes) {
    VectorSet set(params);
    for (std::uint64_t code : codes) {
        if (!set.insert(PackedVector{code})) {
            throw InvalidInput("duplicate code " + std::to_string(code));
        }
    }
    return set;
}

void VectorSet::check_range(PackedVector v) const {
    if (v.code >= params_.order()) {
        throw InvalidInput("code " + std::to_string(v.code) + " out of range for group of order " +
                           std::to_string(params_.order()));
    }
}

bool VectorSet::contains(PackedVector v) const {
    check_range(v);
    if (use_bits_) return (bits_[v.code >> 6] >> (v.code & 63)) & 1;
    return hash_.count(v.code) != 0;
}

bool VectorSet::insert(PackedVector v) {
    check_range(v);
    if (use_bits_) {
        std::uint64_t& word = bits_[v.code >> 6];
        const std::uint64_t bit = 1ull << (v.code & 63);
        if (word & bit) return false;
        word |= bit;
    } else {
        if (!hash_.insert(v.code).second) return false;
    }
    members_.push_back(v);
    return true;
}

bool VectorSet::erase(PackedVector v) {
    check_range(v);
    if (use_bits_) {
        std::uint64_t& word = bits_[v.code >> 6];
        const std::uint64_t bit = 1ull << (v.code & 63);
        if (!(word & bit)) return false;
        word &= ~bit;
    } else {
        if (hash_.erase(v.code) == 0) return false;
    }
    members_.erase(std::find(members_.begin(), members_.end(), v));
    return true;
}

std::vector<PackedVector> VectorSet::sorted_members() const {
    std::vector<PackedVector> sorted = members_;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

bool VectorSet::operator==(const VectorSet& other) const {
    if (!(params_ == other.params_) || size() != other.size()) return false;
    for (PackedVector v : members_) {
        if (!other.contains(v)) return false;
    }
    return true;
}

} // namespace zsf

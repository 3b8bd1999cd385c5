#include "zsf/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <thread>

namespace zsf {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Result of a full pair scan: total hit count plus the earliest hit in
/// (i, j) iteration order over insertion-order indices.
struct ScanOutcome {
    std::uint64_t hits = 0;
    std::uint64_t first_i = UINT64_MAX;
    std::uint64_t first_j = UINT64_MAX;
    PackedVector first_z;

    void merge(const ScanOutcome& o) {
        hits += o.hits;
        if (o.first_i < first_i || (o.first_i == first_i && o.first_j < first_j)) {
            first_i = o.first_i;
            first_j = o.first_j;
            first_z = o.first_z;
        }
    }
};

ScanOutcome scan_stripe(const VectorSet& set, std::size_t start, std::size_t stride) {
    ScanOutcome out;
    const auto& members = set.members();
    const GroupParams& params = set.params();
    const std::size_t n = members.size();
    for (std::size_t i = start; i < n; i += stride) {
        const PackedVector x = members[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const PackedVector y = members[j];
            const PackedVector z = neg(add(x, y, params), params);
            if (z != x && z != y && set.contains(z)) {
                ++out.hits;
                if (i < out.first_i || (i == out.first_i && j < out.first_j)) {
                    out.first_i = i;
                    out.first_j = j;
                    out.first_z = z;
                }
            }
        }
    }
    return out;
}

/// Scans every unordered pair. Workers take striped outer indices and the
/// merge keeps the earliest hit, so the outcome does not depend on the
/// worker count.
ScanOutcome scan_pairs(const VectorSet& set, unsigned threads) {
    const std::size_t n = set.members().size();
    if (threads <= 1 || n < 256) return scan_stripe(set, 0, 1);

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<ScanOutcome> partial(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] { partial[w] = scan_stripe(set, w, workers); });
    }
    for (auto& t : pool) t.join();

    ScanOutcome out;
    for (const auto& p : partial) out.merge(p);
    return out;
}

std::uint64_t pair_count(std::size_t n) {
    return n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

} // namespace

Witness make_witness(PackedVector a, PackedVector b, PackedVector c) {
    PackedVector v[3] = {a, b, c};
    std::sort(v, v + 3);
    return Witness{v[0], v[1], v[2]};
}

bool Witness::valid(const GroupParams& params) const {
    if (x == y || y == z || x == z) return false;
    return add(add(x, y, params), z, params) == zero_vector();
}

VerifyResult verify_pairwise(const VectorSet& set, unsigned threads) {
    const auto start = Clock::now();
    const ScanOutcome scan = scan_pairs(set, threads);

    VerifyResult result;
    result.pairs_checked = pair_count(set.size());
    result.is_free = scan.hits == 0;
    if (!result.is_free) {
        const auto& members = set.members();
        result.witness = make_witness(members[scan.first_i], members[scan.first_j], scan.first_z);
    }
    result.elapsed_seconds = seconds_since(start);
    return result;
}

VerifyResult verify_naive_oracle(const VectorSet& set) {
    if (set.size() > 1000) {
        throw SizeGuardError("naive oracle is limited to 1000 members, got " +
                             std::to_string(set.size()));
    }
    const auto start = Clock::now();
    const auto& members = set.members();
    const GroupParams& params = set.params();
    const std::size_t n = members.size();

    VerifyResult result;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const PackedVector xy = add(members[i], members[j], params);
            for (std::size_t k = j + 1; k < n; ++k) {
                ++result.pairs_checked;
                if (add(xy, members[k], params) == zero_vector()) {
                    if (!result.witness) {
                        result.witness = make_witness(members[i], members[j], members[k]);
                        result.is_free = false;
                    }
                }
            }
        }
    }
    result.elapsed_seconds = seconds_since(start);
    return result;
}

std::uint64_t count_violations(const VectorSet& set, unsigned threads) {
    const std::uint64_t hits = scan_pairs(set, threads).hits;
    // Every distinct zero-sum triple is reached from each of its 3 pairs.
    return hits / 3;
}

BlockedTable::BlockedTable(const GroupParams& params) : params_(params) {
    if (params.order() > kMaxEntries) {
        throw SizeGuardError("blocked table needs " + std::to_string(params.order()) +
                             " entries, above the 2^24 cap; use verify_pairwise instead");
    }
    counts_.assign(params.order(), 0);
}

BlockedTable BlockedTable::build(const VectorSet& set) {
    BlockedTable table(set.params());
    const auto& members = set.members();
    const GroupParams& params = set.params();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const PackedVector z = neg(add(members[i], members[j], params), params);
            if (z != members[i] && z != members[j]) ++table.counts_[z.code];
        }
    }
    return table;
}

void BlockedTable::apply(PackedVector v, const VectorSet& others, std::int32_t delta) {
    for (PackedVector x : others.members()) {
        if (x == v) continue; // {v, v} is not a pair
        const PackedVector z = neg(add(v, x, params_), params_);
        if (z != v && z != x) {
            counts_[z.code] = static_cast<std::uint32_t>(
                static_cast<std::int64_t>(counts_[z.code]) + delta);
        }
    }
}

void BlockedTable::on_insert(PackedVector v, const VectorSet& members_without_v) {
    apply(v, members_without_v, +1);
}

void BlockedTable::on_erase(PackedVector v, const VectorSet& members_without_v) {
    apply(v, members_without_v, -1);
}

TrackedSet::TrackedSet(const GroupParams& params) : set_(params), table_(params) {}

bool TrackedSet::insert(PackedVector v) {
    if (set_.contains(v)) return false;
    table_.on_insert(v, set_);
    set_.insert(v);
    return true;
}

bool TrackedSet::erase(PackedVector v) {
    if (!set_.erase(v)) return false;
    table_.on_erase(v, set_);
    return true;
}

} // namespace zsf

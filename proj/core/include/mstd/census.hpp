#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mstd/intset.hpp"

namespace mstd {

struct CensusOptions {
    bool collect_witnesses = false;
    unsigned workers = 1;
    std::size_t witness_cap = 10'000;  // stored witnesses; count stays exact
    std::string checkpoint_path;       // empty = no checkpointing
    bool resume = false;
    std::uint64_t max_candidates = 0;  // 0 = unlimited; else abort past this
};

struct CensusStats {
    std::uint64_t examined = 0;  // candidate subsets enumerated
    std::uint64_t pruned = 0;    // rejected by gcd / canonical filter
    double seconds = 0.0;
};

/// H(k,n) plus the canonical MSTD witnesses found inside [0,n].
struct CensusResult {
    int k = 0;
    std::int64_t n = 0;
    std::uint64_t count = 0;
    bool truncated = false;
    std::vector<IntSet> witnesses;  // canonical, sorted, pairwise inequivalent
    CensusStats stats;
};

/// Counts affine-equivalence classes of MSTD sets of cardinality k with a
/// representative inside [0,n]. Every class contains its normal form, which
/// also lies in [0,n], so it suffices to enumerate subsets with 0 ∈ S and
/// gcd 1 that win the reflection tie-break, and count those with Δ(S) < 0.
/// k > n+1 yields a zero result. Exceeding max_candidates raises
/// resource_limit_error carrying the last completed partition.
CensusResult census(int k, std::int64_t n, const CensusOptions& opts = {});

/// H(k,n) for n = n_lo..n_hi; raises consistency_error if the sequence ever
/// decreases (that would indicate a canonicalization bug).
std::vector<std::uint64_t> census_monotone_check(int k, std::int64_t n_lo,
                                                 std::int64_t n_hi,
                                                 const CensusOptions& opts = {});

struct SmallestMstdRow {
    int k = 0;
    std::optional<std::int64_t> smallest_n;  // nullopt = none found <= n_max
};

/// For each k <= k_max, the smallest n <= n_max with H(k,n) > 0.
std::vector<SmallestMstdRow> smallest_mstd_scan(int k_max, std::int64_t n_max,
                                                const CensusOptions& opts = {});

}  // namespace mstd

#pragma once

#include <cstdint>
#include <vector>

#include "mstd/intset.hpp"

namespace mstd {

/// Empirical three-part decomposition of the h-fold sumsets of a normalized
/// set: hA = frag_low ∪ [C, h·max(A) − D] ∪ (h·max(A) − frag_high) for every
/// h in [h0, verified_to]. Only certified on the window actually checked.
struct StructureDecomposition {
    bool stabilized = false;
    int h0 = 0;               // first fold where the pattern holds
    std::int64_t low_cut = 0;   // C: start of the central run
    std::int64_t high_cut = 0;  // D: distance of the run's end from h·max(A)
    IntSet frag_low;            // subset of [0, C-2]
    IntSet frag_high;           // subset of [0, D-2], reflected off the top
    int verified_to = 0;        // largest fold checked (even when unstabilized)
};

/// Shared shape of the shifted sum-difference sets j·max(A) + (h−j)A − jA
/// for the middle range j in [h1, h−h1].
struct SumDiffStructure {
    int h1 = 0;
    IntSet frag_low_star;   // subset of [0, C+D-1]
    IntSet frag_high_star;  // subset of [0, C+D-1]
};

/// The vector f(j) = |(h−j)A − jA| for j = 0..h, with shape flags.
struct SumDiffProfile {
    int h = 0;
    std::vector<std::int64_t> counts;
    bool is_unimodal = false;    // non-decreasing then non-increasing
    bool max_at_middle = false;  // max attained at j = floor(h/2)

    bool operator==(const SumDiffProfile&) const = default;
};

struct UnimodalityViolation {
    IntSet set;
    SumDiffProfile profile;
    bool violates_unimodality = false;
    bool violates_max_at_middle = false;

    bool operator==(const UnimodalityViolation&) const = default;
};

struct UnimodalityReport {
    std::vector<UnimodalityViolation> violations;  // sorted by set
    std::uint64_t sets_scanned = 0;
};

/// Computes hA for h = 1..h_max and fits the three-part pattern, returning
/// the smallest h0 for which the fitted parameters are identical across the
/// whole window [h0, h_max]. An unstabilized result (stabilized == false) is
/// returned rather than a fabricated decomposition.
/// Requires min(A) = 0, gcd(A) = 1, |A| >= 2, h_max >= 4.
StructureDecomposition decompose(const IntSet& a, int h_max);

/// Smallest integer >= max(h0, (2C+D)/a*, (C+2D)/a*).
/// Throws std::invalid_argument on an unstabilized decomposition.
int h1_bound(const StructureDecomposition& dec, std::int64_t a_star);

/// Default fold horizon for decompose: max(2·max(A), 10).
int default_fold_horizon(const IntSet& a);

/// Computes j·max(A) + (h−j)A − jA for every j in [h1, h−h1], checks that
/// they all coincide and match the three-part shape with cut C+D, and
/// returns the shared fragments. A disagreement would falsify the underlying
/// theorem and raises consistency_error.
/// Requires a normalized A and h >= 2·h1.
SumDiffStructure sum_diff_structure(const IntSet& a, int h);

/// f(j) for j = 0..h plus unimodality / max-at-middle flags.
SumDiffProfile profile(const IntSet& a, int h);

/// Enumerates normalized sets (min 0, gcd 1) with size <= k_max and
/// max <= n_max, reporting every profile that violates unimodality or
/// max-at-middle. An empty report is evidence, not a proof.
UnimodalityReport unimodality_scan(int k_max, std::int64_t n_max, int h,
                                   unsigned workers = 1);

}  // namespace mstd

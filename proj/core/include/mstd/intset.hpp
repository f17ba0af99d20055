#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace mstd {

/// Immutable finite set of integers, stored as a strictly increasing
/// sequence. The universal operand of every operation in this library.
class IntSet {
public:
    IntSet() = default;

    /// Sorts and deduplicates.
    explicit IntSet(std::vector<std::int64_t> values);

    /// Trusts that `values` is already strictly increasing.
    static IntSet from_sorted(std::vector<std::int64_t> values);

    const std::vector<std::int64_t>& elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }

    /// min/max/diameter require a nonempty set.
    std::int64_t min() const;
    std::int64_t max() const;
    std::int64_t diameter() const;

    bool contains(std::int64_t value) const;

    bool operator==(const IntSet&) const = default;
    // Lexicographic order on the element sequences.
    auto operator<=>(const IntSet&) const = default;

private:
    std::vector<std::int64_t> elems_;
};

struct DeltaReport {
    std::int64_t sum_count;   // |A+A|
    std::int64_t diff_count;  // |A-A|
    std::int64_t delta;       // |A-A| - |A+A|
    bool is_mstd;             // delta < 0
};

/// One representative per affine-equivalence class: min 0, gcd 1, and
/// lexicographically no larger than the reflected representative.
struct CanonicalForm {
    IntSet set;
    bool orientation_flipped;  // true iff the reflection won the tie-break

    bool operator==(const CanonicalForm&) const = default;
};

/// {a+b : a in A, b in B}. Empty if either operand is empty.
/// Throws std::range_error if a sum overflows 64-bit signed range.
IntSet sumset(const IntSet& a, const IntSet& b);

/// {a-b : a in A, b in B}.
IntSet difference_set(const IntSet& a, const IntSet& b);

/// {-a : a in A}.
IntSet negate(const IntSet& a);

/// {a + t : a in A}.
IntSet translate(const IntSet& a, std::int64_t t);

/// {max(A) - a : a in A}. Requires nonempty A.
IntSet reflect(const IntSet& a);

/// hA = A + ... + A with h summands; 0A = {0}.
IntSet h_fold_sum(const IntSet& a, int h);

/// (h-j)A - jA. Requires 0 <= j <= h (std::invalid_argument otherwise).
IntSet sum_difference(const IntSet& a, int h, int j);

/// Exact sum/difference counts and the MSTD verdict.
/// Requires nonempty A (std::invalid_argument otherwise).
DeltaReport delta_report(const IntSet& a);

/// Returns w with A = w - A if A is symmetric, else nullopt. The only
/// possible witness is min(A) + max(A), so exactly that is checked.
std::optional<std::int64_t> symmetry_witness(const IntSet& a);

/// True iff consecutive gaps are all equal; sets of size <= 2 count as APs.
/// Requires nonempty A.
bool is_arithmetic_progression(const IntSet& a);

/// Translate min to 0 and divide by the gcd of the translated elements
/// (gcd taken as 1 for singletons). Result has min 0 and gcd 1.
IntSet normal_form(const IntSet& a);

/// Lexicographically smaller of normal_form(A) and normal_form(reflect(A)).
CanonicalForm canonical_form(const IntSet& a);

/// True iff the two sets lie in the same affine orbit.
bool affinely_equivalent(const IntSet& a, const IntSet& b);

}  // namespace mstd

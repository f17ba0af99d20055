#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mstd/intset.hpp"

namespace mstd {

using BigInt = boost::multiprecision::cpp_int;

/// Base and digit count for the digit lift. m must exceed 2·max(A) of the
/// set being lifted (checked at the use site).
struct LiftParams {
    std::int64_t m = 0;  // base
    int n = 1;           // number of digits
};

/// Exact predicted cardinalities of a lifted set and its sum/difference
/// sets: each is the corresponding base quantity raised to the n-th power.
struct PredictedSizes {
    BigInt set_size;   // |A|^n
    BigInt sum_size;   // |A+A|^n
    BigInt diff_size;  // |A-A|^n
};

/// Default cap on the number of elements digit_lift will materialize.
inline constexpr std::size_t kDefaultMaterializeCap = 1'000'000;

/// A ∪ {a_k} for a_k beyond twice the diameter anchor: requires min(A) = 0
/// and a_k > 2·max(A), which makes the increments exact:
/// Δ grows by |A|−1, |A+A| by |A|+1, |A−A| by 2|A|.
IntSet append_far_element(const IntSet& a, std::int64_t a_k);

/// The set of all n-digit base-m integers with digits drawn from A.
/// Requires 0 ∈ A, |A| >= 2, m > 2·max(A); refuses to materialize more than
/// `cap` elements (resource_limit_error) or values beyond 64 bits
/// (std::range_error).
IntSet digit_lift(const IntSet& a, const LiftParams& p,
                  std::size_t cap = kDefaultMaterializeCap);

/// (|A|^n, |A+A|^n, |A−A|^n) in exact big-integer arithmetic. Independent of
/// the base m as long as m > 2·max(A).
PredictedSizes predicted_sizes(const IntSet& a, int n);

/// True iff |A+A|^n >= |A−A|^n + |A|^n (exact). Guaranteed for n >= |A| when
/// A is MSTD; smaller n are admitted whenever the inequality already holds.
/// Requires A to be MSTD.
bool tower_condition(const IntSet& a, int n);

/// digit_lift(A, p) ∪ {b}: an MSTD set of cardinality |A|^n + 1.
/// Requires A MSTD and normalized, tower_condition(A, p.n), and
/// b > 2·max(digit_lift(A, p)). Precondition failures name the violated
/// bound.
IntSet mstd_tower(const IntSet& a, const LiftParams& p, std::int64_t b,
                  std::size_t cap = kDefaultMaterializeCap);

/// `count` towers over the same lift with b = 2·max(B)+1, 2·max(B)+2, ...
/// All MSTD, pairwise affinely inequivalent.
std::vector<IntSet> family(const IntSet& a, const LiftParams& p, int count,
                           std::size_t cap = kDefaultMaterializeCap);

/// Smallest valid base for lifting A: 2·max(A) + 1.
std::int64_t default_lift_base(const IntSet& a);

}  // namespace mstd

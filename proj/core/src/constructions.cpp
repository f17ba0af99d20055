#include "mstd/constructions.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mstd/errors.hpp"

namespace mstd {

namespace {

void require_mstd(const IntSet& a, const char* op) {
    if (a.empty() || !delta_report(a).is_mstd)
        throw std::domain_error(std::string(op) + " requires an MSTD base set");
}

void require_base(const IntSet& a, std::int64_t m) {
    if (m <= 2 * a.max())
        throw std::domain_error("m must exceed 2*max(A) = " +
                                std::to_string(2 * a.max()) + ", got m = " +
                                std::to_string(m));
}

}  // namespace

std::int64_t default_lift_base(const IntSet& a) { return 2 * a.max() + 1; }

IntSet append_far_element(const IntSet& a, std::int64_t a_k) {
    if (a.empty() || a.min() != 0)
        throw std::domain_error("append_far_element requires min(A) = 0");
    if (a_k <= 2 * a.max())
        throw std::domain_error("appended element must exceed 2*max(A) = " +
                                std::to_string(2 * a.max()) + ", got " +
                                std::to_string(a_k));
    std::vector<std::int64_t> out = a.elements();
    out.push_back(a_k);
    return IntSet::from_sorted(std::move(out));
}

IntSet digit_lift(const IntSet& a, const LiftParams& p, std::size_t cap) {
    if (a.size() < 2 || a.min() != 0)
        throw std::domain_error("digit_lift requires 0 in A and |A| >= 2");
    if (p.n < 1) throw std::domain_error("digit_lift requires n >= 1");
    require_base(a, p.m);

    PredictedSizes sizes = predicted_sizes(a, p.n);
    if (sizes.set_size > BigInt(cap))
        throw resource_limit_error(
            "digit_lift would materialize " + sizes.set_size.str() +
                " elements, above the cap of " + std::to_string(cap),
            0);
    // Largest value: a* * (m^n - 1) / (m - 1), checked in exact arithmetic.
    BigInt largest = 0;
    BigInt power = 1;
    for (int i = 0; i < p.n; ++i) {
        largest += BigInt(a.max()) * power;
        power *= p.m;
    }
    if (largest > BigInt(std::numeric_limits<std::int64_t>::max()))
        throw std::range_error("digit_lift values exceed the 64-bit range: " +
                               largest.str());

    std::vector<std::int64_t> values = {0};
    std::int64_t place = 1;
    for (int i = 0; i < p.n; ++i) {
        std::vector<std::int64_t> next;
        next.reserve(values.size() * a.size());
        for (std::int64_t digit : a.elements())
            for (std::int64_t v : values) next.push_back(v + digit * place);
        values = std::move(next);
        if (i + 1 < p.n) place *= p.m;
    }
    std::sort(values.begin(), values.end());
    return IntSet::from_sorted(std::move(values));
}

PredictedSizes predicted_sizes(const IntSet& a, int n) {
    if (a.empty()) throw std::invalid_argument("predicted_sizes of empty set");
    if (n < 1) throw std::invalid_argument("predicted_sizes requires n >= 1");
    DeltaReport base = delta_report(a);
    PredictedSizes sizes;
    sizes.set_size = boost::multiprecision::pow(BigInt(a.size()), unsigned(n));
    sizes.sum_size = boost::multiprecision::pow(BigInt(base.sum_count), unsigned(n));
    sizes.diff_size =
        boost::multiprecision::pow(BigInt(base.diff_count), unsigned(n));
    return sizes;
}

bool tower_condition(const IntSet& a, int n) {
    require_mstd(a, "tower_condition");
    PredictedSizes sizes = predicted_sizes(a, n);
    return sizes.sum_size >= sizes.diff_size + sizes.set_size;
}

IntSet mstd_tower(const IntSet& a, const LiftParams& p, std::int64_t b,
                  std::size_t cap) {
    require_mstd(a, "mstd_tower");
    if (a.min() != 0)
        throw std::domain_error("mstd_tower requires a normalized base set "
                                "(min(A) = 0)");
    if (!tower_condition(a, p.n)) {
        PredictedSizes sizes = predicted_sizes(a, p.n);
        throw std::domain_error(
            "tower_condition fails: |A+A|^n = " + sizes.sum_size.str() +
            " < " + BigInt(sizes.diff_size + sizes.set_size).str() +
            " = |A-A|^n + |A|^n; increase n (n >= |A| always works)");
    }
    IntSet lifted = digit_lift(a, p, cap);
    if (b <= 2 * lifted.max())
        throw std::domain_error("b must exceed 2*max(B) = " +
                                std::to_string(2 * lifted.max()) + ", got " +
                                std::to_string(b));
    std::vector<std::int64_t> out = lifted.elements();
    out.push_back(b);
    return IntSet::from_sorted(std::move(out));
}

std::vector<IntSet> family(const IntSet& a, const LiftParams& p, int count,
                           std::size_t cap) {
    if (count < 1) throw std::invalid_argument("family requires count >= 1");
    IntSet lifted = digit_lift(a, p, cap);
    std::vector<IntSet> out;
    out.reserve(std::size_t(count));
    const std::int64_t first_b = 2 * lifted.max() + 1;
    for (int i = 0; i < count; ++i)
        out.push_back(mstd_tower(a, p, first_b + i, cap));
    return out;
}

}  // namespace mstd

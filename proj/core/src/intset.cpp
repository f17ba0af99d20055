#include "mstd/intset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mstd {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::range_error("integer overflow in set arithmetic: " +
                               std::to_string(a) + " + " + std::to_string(b));
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::range_error("integer overflow in set arithmetic: " +
                               std::to_string(a) + " - " + std::to_string(b));
    return r;
}

// Spans up to this many bits go through the word-parallel path.
constexpr std::uint64_t kBitsetSpanLimit = std::uint64_t{1} << 26;

// dst |= src << shift, where both are bit arrays.
void or_shifted(std::vector<std::uint64_t>& dst,
                const std::vector<std::uint64_t>& src, std::uint64_t shift) {
    const std::size_t word = shift / 64;
    const unsigned bit = shift % 64;
    if (bit == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[word + i] |= src[i];
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[word + i] |= (src[i] << bit) | carry;
        carry = src[i] >> (64 - bit);
    }
    if (carry) dst[word + src.size()] |= carry;
}

IntSet sumset_bitset(const IntSet& a, const IntSet& b, std::int64_t lo,
                     std::uint64_t span) {
    std::vector<std::uint64_t> bmask((b.diameter()) / 64 + 1, 0);
    for (std::int64_t x : b.elements())
        bmask[std::uint64_t(x - b.min()) / 64] |=
            std::uint64_t{1} << (std::uint64_t(x - b.min()) % 64);

    std::vector<std::uint64_t> bits(span / 64 + 2, 0);
    for (std::int64_t x : a.elements())
        or_shifted(bits, bmask, std::uint64_t(x - a.min()));

    std::vector<std::int64_t> out;
    out.reserve(a.size() + b.size());
    for (std::size_t w = 0; w < bits.size(); ++w) {
        std::uint64_t word = bits[w];
        while (word) {
            unsigned bit = std::countr_zero(word);
            out.push_back(lo + std::int64_t(w * 64 + bit));
            word &= word - 1;
        }
    }
    return IntSet::from_sorted(std::move(out));
}

IntSet sumset_dense(const IntSet& a, const IntSet& b) {
    std::vector<std::int64_t> out;
    out.reserve(a.size() * b.size());
    for (std::int64_t x : a.elements())
        for (std::int64_t y : b.elements()) out.push_back(checked_add(x, y));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return IntSet::from_sorted(std::move(out));
}

}  // namespace

IntSet::IntSet(std::vector<std::int64_t> values) : elems_(std::move(values)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

IntSet IntSet::from_sorted(std::vector<std::int64_t> values) {
    IntSet s;
    s.elems_ = std::move(values);
    return s;
}

std::int64_t IntSet::min() const {
    if (empty()) throw std::invalid_argument("min of empty set");
    return elems_.front();
}

std::int64_t IntSet::max() const {
    if (empty()) throw std::invalid_argument("max of empty set");
    return elems_.back();
}

std::int64_t IntSet::diameter() const { return checked_sub(max(), min()); }

bool IntSet::contains(std::int64_t value) const {
    return std::binary_search(elems_.begin(), elems_.end(), value);
}

IntSet sumset(const IntSet& a, const IntSet& b) {
    if (a.empty() || b.empty()) return {};
    const std::int64_t lo = checked_add(a.min(), b.min());
    const std::int64_t hi = checked_add(a.max(), b.max());
    const std::uint64_t span = std::uint64_t(hi - lo) + 1;
    if (span <= kBitsetSpanLimit) return sumset_bitset(a, b, lo, span - 1);
    return sumset_dense(a, b);
}

IntSet difference_set(const IntSet& a, const IntSet& b) {
    return sumset(a, negate(b));
}

IntSet negate(const IntSet& a) {
    std::vector<std::int64_t> out(a.size());
    const auto& e = a.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        out[e.size() - 1 - i] = checked_sub(0, e[i]);
    return IntSet::from_sorted(std::move(out));
}

IntSet translate(const IntSet& a, std::int64_t t) {
    std::vector<std::int64_t> out;
    out.reserve(a.size());
    for (std::int64_t x : a.elements()) out.push_back(checked_add(x, t));
    return IntSet::from_sorted(std::move(out));
}

IntSet reflect(const IntSet& a) {
    const std::int64_t m = a.max();
    std::vector<std::int64_t> out(a.size());
    const auto& e = a.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        out[e.size() - 1 - i] = checked_sub(m, e[i]);
    return IntSet::from_sorted(std::move(out));
}

IntSet h_fold_sum(const IntSet& a, int h) {
    if (h < 0) throw std::invalid_argument("negative fold count");
    IntSet result = IntSet::from_sorted({0});
    for (int i = 0; i < h; ++i) result = sumset(result, a);
    return result;
}

IntSet sum_difference(const IntSet& a, int h, int j) {
    if (j < 0 || j > h)
        throw std::invalid_argument("sum_difference requires 0 <= j <= h, got j=" +
                                    std::to_string(j) + ", h=" + std::to_string(h));
    return sumset(h_fold_sum(a, h - j), negate(h_fold_sum(a, j)));
}

DeltaReport delta_report(const IntSet& a) {
    if (a.empty()) throw std::invalid_argument("delta_report of empty set");
    const auto sums = std::int64_t(sumset(a, a).size());
    const auto diffs = std::int64_t(difference_set(a, a).size());
    return {sums, diffs, diffs - sums, diffs < sums};
}

std::optional<std::int64_t> symmetry_witness(const IntSet& a) {
    if (a.empty()) throw std::invalid_argument("symmetry test of empty set");
    const std::int64_t w = checked_add(a.min(), a.max());
    const auto& e = a.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] + e[e.size() - 1 - i] != w) return std::nullopt;
    return w;
}

bool is_arithmetic_progression(const IntSet& a) {
    if (a.empty()) throw std::invalid_argument("AP test of empty set");
    const auto& e = a.elements();
    if (e.size() <= 2) return true;
    const std::int64_t d = e[1] - e[0];
    for (std::size_t i = 2; i < e.size(); ++i)
        if (e[i] - e[i - 1] != d) return false;
    return true;
}

IntSet normal_form(const IntSet& a) {
    if (a.empty()) throw std::invalid_argument("normal form of empty set");
    const std::int64_t base = a.min();
    std::int64_t d = 0;
    for (std::int64_t x : a.elements()) d = std::gcd(d, checked_sub(x, base));
    if (d == 0) d = 1;  // singleton
    std::vector<std::int64_t> out;
    out.reserve(a.size());
    for (std::int64_t x : a.elements()) out.push_back((x - base) / d);
    return IntSet::from_sorted(std::move(out));
}

CanonicalForm canonical_form(const IntSet& a) {
    IntSet forward = normal_form(a);
    IntSet backward = normal_form(reflect(a));
    if (backward < forward) return {std::move(backward), true};
    return {std::move(forward), false};
}

bool affinely_equivalent(const IntSet& a, const IntSet& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("affine equivalence of empty set");
    return canonical_form(a).set == canonical_form(b).set;
}

}  // namespace mstd

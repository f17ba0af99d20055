#include "mstd/structure.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "mstd/errors.hpp"

namespace mstd {

namespace {

struct FoldShape {
    bool ok = false;
    std::int64_t low_cut = 0;
    std::int64_t high_cut = 0;
    IntSet frag_low;
    IntSet frag_high;

    bool operator==(const FoldShape&) const = default;
};

// Fits one fold: the central run is the maximal interval of consecutive
// elements containing floor(h·a*/2); everything below is the low fragment,
// everything above reflects into the high fragment.
FoldShape fit_fold(const IntSet& fold, std::int64_t top) {
    FoldShape shape;
    const std::int64_t mid = top / 2;
    const auto& e = fold.elements();
    auto it = std::lower_bound(e.begin(), e.end(), mid);
    if (it == e.end() || *it != mid) return shape;  // pattern absent at this h

    std::size_t l = std::size_t(it - e.begin());
    std::size_t r = l;
    while (l > 0 && e[l - 1] == e[l] - 1) --l;
    while (r + 1 < e.size() && e[r + 1] == e[r] + 1) ++r;

    shape.ok = true;
    shape.low_cut = e[l];
    shape.high_cut = top - e[r];
    shape.frag_low = IntSet::from_sorted({e.begin(), e.begin() + l});
    std::vector<std::int64_t> high;
    for (std::size_t i = e.size(); i-- > r + 1;) high.push_back(top - e[i]);
    shape.frag_high = IntSet::from_sorted(std::move(high));
    return shape;
}

void require_normalized(const IntSet& a) {
    if (a.size() < 2 || a.min() != 0)
        throw std::domain_error("set must be normalized with min 0 and size >= 2");
    std::int64_t g = 0;
    for (std::int64_t x : a.elements()) g = std::gcd(g, x);
    if (g != 1) throw std::domain_error("set must have gcd 1 (normalize first)");
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    return (num + den - 1) / den;
}

}  // namespace

StructureDecomposition decompose(const IntSet& a, int h_max) {
    require_normalized(a);
    if (h_max < 4) throw std::domain_error("decompose requires h_max >= 4");

    const std::int64_t a_star = a.max();
    std::vector<FoldShape> shapes(std::size_t(h_max) + 1);
    IntSet fold = a;
    shapes[1] = fit_fold(fold, a_star);
    for (int h = 2; h <= h_max; ++h) {
        fold = sumset(fold, a);
        shapes[std::size_t(h)] = fit_fold(fold, std::int64_t(h) * a_star);
    }

    // Walk down from h_max while the fitted parameters agree.
    int h0 = h_max;
    if (shapes[std::size_t(h_max)].ok) {
        while (h0 > 1 && shapes[std::size_t(h0 - 1)] == shapes[std::size_t(h_max)])
            --h0;
    }

    StructureDecomposition dec;
    dec.verified_to = h_max;
    if (!shapes[std::size_t(h_max)].ok || h0 == h_max) {
        // A single matching fold is no evidence of stabilization.
        return dec;
    }
    const FoldShape& s = shapes[std::size_t(h_max)];
    dec.stabilized = true;
    dec.h0 = h0;
    dec.low_cut = s.low_cut;
    dec.high_cut = s.high_cut;
    dec.frag_low = s.frag_low;
    dec.frag_high = s.frag_high;
    return dec;
}

int h1_bound(const StructureDecomposition& dec, std::int64_t a_star) {
    if (!dec.stabilized)
        throw std::invalid_argument("h1_bound requires a stabilized decomposition");
    if (a_star <= 0) throw std::invalid_argument("a_star must be positive");
    std::int64_t h1 = dec.h0;
    h1 = std::max(h1, ceil_div(2 * dec.low_cut + dec.high_cut, a_star));
    h1 = std::max(h1, ceil_div(dec.low_cut + 2 * dec.high_cut, a_star));
    return int(std::max<std::int64_t>(h1, 1));
}

int default_fold_horizon(const IntSet& a) {
    return int(std::max<std::int64_t>(2 * a.max(), 10));
}

SumDiffStructure sum_diff_structure(const IntSet& a, int h) {
    require_normalized(a);
    const std::int64_t a_star = a.max();
    StructureDecomposition dec =
        decompose(a, std::max(default_fold_horizon(a), h));
    if (!dec.stabilized)
        throw std::domain_error("sumset structure did not stabilize");
    const int h1 = h1_bound(dec, a_star);
    if (h < 2 * h1)
        throw std::domain_error("sum_diff_structure requires h >= 2*h1 = " +
                                std::to_string(2 * h1));

    const std::int64_t cut = dec.low_cut + dec.high_cut;
    const std::int64_t top = std::int64_t(h) * a_star;

    SumDiffStructure result;
    result.h1 = h1;
    bool first = true;
    IntSet reference;
    for (int j = h1; j <= h - h1; ++j) {
        IntSet shifted = translate(sum_difference(a, h, j),
                                   std::int64_t(j) * a_star);
        if (first) {
            reference = shifted;
            first = false;
        } else if (shifted != reference) {
            throw consistency_error(
                "sum-difference sets disagree across the middle range at j=" +
                std::to_string(j) + " (this would falsify the structure theorem)");
        }
    }

    // Split the shared set against the cut C+D and check the middle interval
    // is completely full.
    const auto& e = reference.elements();
    std::vector<std::int64_t> low, high;
    std::int64_t expected = cut;
    for (std::int64_t x : e) {
        if (x < cut) {
            low.push_back(x);
        } else if (x <= top - cut) {
            if (x != expected)
                throw consistency_error(
                    "hole in the central interval of the sum-difference set");
            ++expected;
        } else {
            high.push_back(top - x);
        }
    }
    if (expected != top - cut + 1)
        throw consistency_error("central interval of the sum-difference set is "
                                "shorter than the structure theorem requires");
    std::sort(high.begin(), high.end());
    result.frag_low_star = IntSet::from_sorted(std::move(low));
    result.frag_high_star = IntSet::from_sorted(std::move(high));
    return result;
}

SumDiffProfile profile(const IntSet& a, int h) {
    if (a.empty()) throw std::invalid_argument("profile of empty set");
    if (h < 1) throw std::invalid_argument("profile requires h >= 1");
    SumDiffProfile p;
    p.h = h;
    p.counts.reserve(std::size_t(h) + 1);
    for (int j = 0; j <= h; ++j)
        p.counts.push_back(std::int64_t(sum_difference(a, h, j).size()));

    std::size_t j = 0;
    while (j + 1 < p.counts.size() && p.counts[j + 1] >= p.counts[j]) ++j;
    while (j + 1 < p.counts.size() && p.counts[j + 1] <= p.counts[j]) ++j;
    p.is_unimodal = (j + 1 == p.counts.size());
    p.max_at_middle = *std::max_element(p.counts.begin(), p.counts.end()) ==
                      p.counts[std::size_t(h / 2)];
    return p;
}

namespace {

// Enumerates all normalized supersets of `current` inside (last, n_max] and
// profiles each emitted set.
void scan_recurse(std::vector<std::int64_t>& current, std::int64_t g,
                  std::int64_t last, std::int64_t n_max, int k_max, int h,
                  std::vector<UnimodalityViolation>& out,
                  std::uint64_t& scanned) {
    if (g == 1) {
        ++scanned;
        IntSet a{std::vector<std::int64_t>(current)};
        SumDiffProfile p = profile(a, h);
        if (!p.is_unimodal || !p.max_at_middle) {
            UnimodalityViolation v;
            v.set = std::move(a);
            v.violates_unimodality = !p.is_unimodal;
            v.violates_max_at_middle = !p.max_at_middle;
            v.profile = std::move(p);
            out.push_back(std::move(v));
        }
    }
    if (int(current.size()) >= k_max) return;
    for (std::int64_t next = last + 1; next <= n_max; ++next) {
        current.push_back(next);
        scan_recurse(current, std::gcd(g, next), next, n_max, k_max, h, out,
                     scanned);
        current.pop_back();
    }
}

}  // namespace

UnimodalityReport unimodality_scan(int k_max, std::int64_t n_max, int h,
                                   unsigned workers) {
    if (k_max < 1 || n_max < 0 || h < 1 || workers < 1)
        throw std::invalid_argument("unimodality_scan bounds must be positive");

    // Partition 0 is the singleton {0}; partition p >= 1 covers all sets whose
    // second-smallest element is p.
    const std::size_t partitions = std::size_t(n_max) + 1;
    std::vector<std::vector<UnimodalityViolation>> found(partitions);
    std::vector<std::uint64_t> scanned(partitions, 0);
    std::atomic<std::size_t> next_partition{0};

    auto run = [&]() {
        for (;;) {
            const std::size_t p = next_partition.fetch_add(1);
            if (p >= partitions) return;
            if (p == 0) {
                ++scanned[0];  // {0}: counts are constant |A| = 1, never a violation
                continue;
            }
            if (k_max < 2) continue;
            std::vector<std::int64_t> current = {0, std::int64_t(p)};
            scan_recurse(current, std::int64_t(p), std::int64_t(p), n_max, k_max,
                         h, found[p], scanned[p]);
        }
    };

    std::vector<std::thread> pool;
    const unsigned n_threads = std::min<unsigned>(workers, unsigned(partitions));
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();

    UnimodalityReport report;
    for (std::size_t p = 0; p < partitions; ++p) {
        report.sets_scanned += scanned[p];
        for (auto& v : found[p]) report.violations.push_back(std::move(v));
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const auto& x, const auto& y) { return x.set < y.set; });
    return report;
}

}  // namespace mstd

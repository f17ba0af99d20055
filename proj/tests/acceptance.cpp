// Acceptance suite: exercises the headline results end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.
//
// Usage: mstd_acceptance [--seed N]

#include <chrono>
#include <cstring>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mstd/census.hpp"
#include "mstd/constructions.hpp"
#include "mstd/intset.hpp"
#include "mstd/structure.hpp"
#include "oracles.hpp"

using namespace mstd;
using mstd::testing::oracle_census;
using mstd::testing::random_normalized_set;
using mstd::testing::random_set;
using mstd::testing::random_symmetric_set;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& text) { g_notes.push_back(text); }

void criterion(int number, const std::string& name, bool passed,
               double seconds) {
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << "criterion " << number
              << ": " << name << "  (" << seconds << " s)\n";
    for (const auto& text : g_notes) std::cout << "       " << text << "\n";
    g_notes.clear();
    if (!passed) ++g_failures;
}

template <typename Fn>
void run(int number, const std::string& name, Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool passed = false;
    try {
        passed = body();
    } catch (const std::exception& e) {
        note(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    criterion(number, name, passed, seconds);
}

IntSet S(std::vector<std::int64_t> v) { return IntSet(std::move(v)); }

IntSet interval(std::int64_t lo, std::int64_t hi,
                std::vector<std::int64_t> missing = {}) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; ++v)
        if (std::find(missing.begin(), missing.end(), v) == missing.end())
            out.push_back(v);
    return IntSet::from_sorted(std::move(out));
}

bool check(bool condition, const std::string& label) {
    if (!condition) note("failed: " + label);
    return condition;
}

const IntSet kMstd8 = S({0, 2, 3, 4, 7, 11, 12, 14});

// --------------------------------------------------------------- criteria --

bool fixture_exactness() {
    bool ok = true;
    {
        const IntSet a = S({0, 2, 3});
        const DeltaReport r = delta_report(a);
        ok &= check(r.sum_count == 6 && r.diff_count == 7, "{0,2,3} counts");
    }
    {
        const IntSet a = S({0, 1, 3, 4, 5, 8});
        const DeltaReport r = delta_report(a);
        ok &= check(r.sum_count == 15 && r.diff_count == 15,
                    "{0,1,3,4,5,8} counts");
        ok &= check(sumset(a, a) == interval(0, 16, {14, 15}),
                    "{0,1,3,4,5,8} sumset");
        ok &= check(difference_set(a, a) == interval(-8, 8, {-6, 6}),
                    "{0,1,3,4,5,8} difference set");
    }
    {
        const DeltaReport r = delta_report(kMstd8);
        ok &= check(r.sum_count == 26 && r.diff_count == 25, "8-set counts");
        ok &= check(sumset(kMstd8, kMstd8) == interval(0, 28, {1, 20, 27}),
                    "8-set sumset");
        ok &= check(difference_set(kMstd8, kMstd8) ==
                        interval(-14, 14, {-13, -6, 6, 13}),
                    "8-set difference set");
    }
    {
        const IntSet b = S({0, 1, 2, 4, 7, 8, 12, 14, 15});
        const DeltaReport r = delta_report(b);
        ok &= check(r.sum_count == 30 && r.diff_count == 29, "9-set counts");
        ok &= check(sumset(b, b) == interval(0, 30, {25}), "9-set sumset");
        ok &= check(difference_set(b, b) == interval(-15, 15, {-9, 9}),
                    "9-set difference set");
    }
    {
        const IntSet c =
            S({0, 1, 2, 4, 5, 9, 12, 13, 14, 16, 17, 21, 24, 25, 26, 28, 29});
        const DeltaReport r = delta_report(c);
        ok &= check(r.sum_count == 59 && r.diff_count == 55, "17-set counts");
        ok &= check(sumset(c, c) == interval(0, 58), "17-set sumset");
        ok &= check(difference_set(c, c) == interval(-29, 29, {-18, -6, 6, 18}),
                    "17-set difference set");
    }
    return ok;
}

bool hegarty_census() {
    bool ok = true;
    CensusOptions opts;
    opts.collect_witnesses = true;
    const CensusResult r14 = census(8, 14, opts);
    ok &= check(r14.count == 1 && r14.witnesses.size() == 1 &&
                    r14.witnesses[0] == kMstd8,
                "H(8,14) = 1 with the unique Hegarty witness");
    ok &= check(census(8, 13).count == 0, "H(8,13) = 0");
    for (int k = 1; k <= 7 && ok; ++k)
        for (std::int64_t n = std::max(1, k - 1); n <= 16; ++n)
            if (census(k, n).count != 0) {
                ok = check(false, "H(" + std::to_string(k) + "," +
                                      std::to_string(n) + ") = 0");
                break;
            }
    return ok;
}

bool marica_witness() {
    const IntSet marica = S({1, 2, 3, 5, 8, 9, 13, 15, 16});
    const CanonicalForm c = canonical_form(marica);
    bool ok = check(c.set.size() == 9, "canonical form keeps 9 elements");
    ok &= check(delta_report(c.set).is_mstd, "canonical form is MSTD");
    ok &= check(normal_form(marica) == S({0, 1, 2, 4, 7, 8, 12, 14, 15}),
                "normal form is the classical 9-element MSTD set");
    CensusOptions opts;
    opts.workers = 4;
    ok &= check(census(9, 15, opts).count >= 1, "H(9,15) >= 1");
    return ok;
}

bool lemma5_lift() {
    bool ok = true;
    for (std::int64_t m : {29, 31}) {
        const IntSet lifted = digit_lift(kMstd8, {m, 2});
        const DeltaReport r = delta_report(lifted);
        const PredictedSizes predicted = predicted_sizes(kMstd8, 2);
        ok &= check(lifted.size() == 64 && r.sum_count == 676 &&
                        r.diff_count == 625,
                    "m=" + std::to_string(m) + " lift measures (64, 676, 625)");
        ok &= check(BigInt(lifted.size()) == predicted.set_size &&
                        BigInt(r.sum_count) == predicted.sum_size &&
                        BigInt(r.diff_count) == predicted.diff_size,
                    "measured sizes match predicted_sizes");
    }
    return ok;
}

bool tower_construction() {
    const IntSet lifted = digit_lift(kMstd8, {29, 3});
    const IntSet tower = mstd_tower(kMstd8, {29, 3}, 2 * lifted.max() + 1);
    const DeltaReport r = delta_report(tower);
    bool ok = check(tower.size() == 513, "tower has 513 elements");
    ok &= check(r.delta == -1440 && r.is_mstd, "direct Delta = -1440, MSTD");

    bool rejected = false;
    try {
        mstd_tower(kMstd8, {29, 2}, 1000000);
    } catch (const std::domain_error&) {
        rejected = true;
    }
    ok &= check(rejected, "n=2 rejected by tower_condition (676 < 689)");

    const auto members = family(kMstd8, {29, 3}, 5);
    for (std::size_t i = 0; i < members.size(); ++i) {
        ok &= check(delta_report(members[i]).is_mstd, "family member is MSTD");
        for (std::size_t j = i + 1; j < members.size(); ++j)
            ok &= check(!affinely_equivalent(members[i], members[j]),
                        "family members pairwise inequivalent");
    }
    return ok;
}

bool theorem6_inequality() {
    bool ok = true;
    for (int n = 8; n <= 16; ++n) {
        const bool holds =
            boost::multiprecision::pow(BigInt(26), unsigned(n)) >=
            boost::multiprecision::pow(BigInt(25), unsigned(n)) +
                boost::multiprecision::pow(BigInt(8), unsigned(n));
        ok &= check(holds && tower_condition(kMstd8, n),
                    "26^n >= 25^n + 8^n at n=" + std::to_string(n));
    }
    return ok;
}

bool property_suites(std::uint64_t seed) {
    bool ok = true;
    std::mt19937_64 rng(seed);

    // Sum-difference lower bound h(k-1)+1, equality iff AP (h >= 2; at h = 1
    // both sides degenerate to |A|).
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const int k = 1 + int(rng() % 6);
        const IntSet a = random_set(rng, k, -40, 40);
        for (int h = 1; h <= 4; ++h)
            for (int j = 0; j <= h; ++j) {
                const auto count = std::int64_t(sum_difference(a, h, j).size());
                const std::int64_t bound = std::int64_t(h) * (k - 1) + 1;
                ok &= check(count >= bound, "fold lower bound");
                if (h >= 2)
                    ok &= check((count == bound) == is_arithmetic_progression(a),
                                "equality iff AP");
            }
    }
    if (ok) note("fold bound: 1000 random sets, zero violations");

    // Symmetric sets: |(h-j)A - jA| = |hA|.
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const IntSet a =
            random_symmetric_set(rng, 1 + int(rng() % 4), 0, 20, 50);
        for (int h = 1; h <= 4; ++h) {
            const std::size_t whole = h_fold_sum(a, h).size();
            for (int j = 0; j <= h; ++j)
                ok &= check(sum_difference(a, h, j).size() == whole,
                            "symmetric flatness");
        }
    }
    if (ok) note("symmetric sets: 1000 random sets, zero violations");

    // Far-element appending: exact increments.
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const int k = 1 + int(rng() % 8);
        const IntSet a = k == 1 ? S({0}) : random_normalized_set(rng, k, 30);
        const std::int64_t far = 2 * a.max() + 1 + std::int64_t(rng() % 25);
        const DeltaReport before = delta_report(a);
        const DeltaReport after = delta_report(append_far_element(a, far));
        ok &= check(after.delta - before.delta == k - 1, "Delta increment");
        ok &= check(after.sum_count - before.sum_count == k + 1,
                    "sum increment");
        ok &= check(after.diff_count - before.diff_count == 2 * k,
                    "difference increment");
    }
    if (ok) note("appending: 1000 random sets, zero violations");

    // Affine invariance of Delta and of the canonical form.
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const int k = 1 + int(rng() % 6);
        const IntSet a = random_set(rng, k, -30, 30);
        std::int64_t lambda = std::int64_t(rng() % 11) - 5;
        if (lambda == 0) lambda = 1;
        const std::int64_t mu = std::int64_t(rng() % 101) - 50;
        std::vector<std::int64_t> image;
        for (std::int64_t x : a.elements()) image.push_back(lambda * x + mu);
        const IntSet b{std::move(image)};
        ok &= check(delta_report(b).delta == delta_report(a).delta,
                    "Delta affine-invariant");
        ok &= check(canonical_form(b).set == canonical_form(a).set,
                    "canonical form affine-invariant");
    }
    if (ok) note("affine invariance: 1000 random maps, zero violations");

    // Census vs full-orbit brute force.
    for (int k = 2; k <= 5 && ok; ++k)
        for (std::int64_t n = k - 1; n <= 10; ++n)
            ok &= check(census(k, n).count == oracle_census(k, n),
                        "census oracle equivalence at k=" + std::to_string(k) +
                            ", n=" + std::to_string(n));
    if (ok) note("census oracle: exact match for all k <= 5, n <= 10");
    return ok;
}

bool determinism() {
    CensusOptions one;
    one.collect_witnesses = true;
    CensusOptions eight = one;
    eight.workers = 8;
    const CensusResult a = census(9, 18, one);
    const CensusResult b = census(9, 18, eight);
    bool ok = check(a.count == b.count, "counts identical across worker counts");
    ok &= check(a.witnesses == b.witnesses, "witness lists identical");
    note("H(9,18) = " + std::to_string(a.count));
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 20250824;
    for (int i = 1; i < argc - 1; ++i)
        if (std::strcmp(argv[i], "--seed") == 0)
            seed = std::stoull(argv[i + 1]);

    run(1, "fixture exactness for the five named sets", fixture_exactness);
    run(2, "Hegarty census: H(8,14)=1, H(8,13)=0, H(k<=7,n<=16)=0",
        hegarty_census);
    run(3, "Marica witness normalizes to a 9-element MSTD set, H(9,15)>=1",
        marica_witness);
    run(4, "digit lift (m=29 and m=31, n=2) measures (64, 676, 625)",
        lemma5_lift);
    run(5, "513-element tower with Delta=-1440; n=2 rejected; 5-member family",
        tower_construction);
    run(6, "26^n >= 25^n + 8^n for n in [8,16]", theorem6_inequality);
    run(7, "randomized property suites (seed " + std::to_string(seed) + ")",
        [&]() { return property_suites(seed); });
    run(8, "census(9,18) identical with 1 and 8 workers", determinism);

    if (g_failures > 0) {
        std::cout << g_failures << " criteria FAILED\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}

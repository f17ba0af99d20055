#include "mstd/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mstd/errors.hpp"
#include "mstd/format.hpp"

namespace mstd {

namespace {

constexpr const char* kCheckpointHeader = "mstd-census v1";

// Per-worker scratch for the fast Δ computation: stamped presence arrays so
// they never need clearing between candidates.
struct DeltaScratch {
    std::vector<std::uint32_t> sums, diffs;
    std::uint32_t epoch = 0;

    explicit DeltaScratch(std::int64_t n)
        : sums(std::size_t(2 * n + 1), 0), diffs(std::size_t(2 * n + 1), 0) {}

    // Returns |S-S| - |S+S| for S ⊆ [0,n].
    std::int64_t delta(const std::vector<std::int64_t>& s, std::int64_t n) {
        ++epoch;
        std::int64_t sum_count = 0, diff_count = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i; j < s.size(); ++j) {
                const std::size_t sum = std::size_t(s[i] + s[j]);
                if (sums[sum] != epoch) {
                    sums[sum] = epoch;
                    ++sum_count;
                }
                const std::size_t diff = std::size_t(s[j] - s[i] + n);
                if (diffs[diff] != epoch) {
                    diffs[diff] = epoch;
                    diff_count += (i == j) ? 1 : 2;
                }
            }
        }
        return diff_count - sum_count;
    }
};

// True iff s is lexicographically <= its reflection {max - x}.
bool canonical_orientation(const std::vector<std::int64_t>& s) {
    const std::int64_t top = s.back();
    const std::size_t k = s.size();
    for (std::size_t i = 0; i < k; ++i) {
        const std::int64_t reflected = top - s[k - 1 - i];
        if (s[i] != reflected) return s[i] < reflected;
    }
    return true;
}

struct PartitionResult {
    std::uint64_t count = 0, examined = 0, pruned = 0;
    std::vector<IntSet> witnesses;
    bool done = false;
};

struct SearchContext {
    int k;
    std::int64_t n;
    const CensusOptions& opts;
    std::atomic<std::uint64_t> global_examined{0};
    std::atomic<bool> abort{false};

    SearchContext(int k_, std::int64_t n_, const CensusOptions& o)
        : k(k_), n(n_), opts(o) {}
};

void enumerate(SearchContext& ctx, DeltaScratch& scratch,
               std::vector<std::int64_t>& current, std::int64_t g,
               PartitionResult& out) {
    if (int(current.size()) == ctx.k) {
        ++out.examined;
        if (ctx.opts.max_candidates &&
            ctx.global_examined.fetch_add(1, std::memory_order_relaxed) + 1 >
                ctx.opts.max_candidates) {
            ctx.abort.store(true, std::memory_order_relaxed);
            return;
        }
        if (g != 1 || !canonical_orientation(current)) {
            ++out.pruned;
            return;
        }
        if (scratch.delta(current, ctx.n) < 0) {
            // Correctness firewall: the emitted verdict is always recomputed
            // from scratch through the public operations.
            IntSet witness{std::vector<std::int64_t>(current)};
            DeltaReport report = delta_report(witness);
            if (!report.is_mstd)
                throw consistency_error(
                    "fast Δ and delta_report disagree on a census candidate");
            ++out.count;
            if (ctx.opts.collect_witnesses &&
                out.witnesses.size() < ctx.opts.witness_cap)
                out.witnesses.push_back(std::move(witness));
        }
        return;
    }
    const std::int64_t remaining = std::int64_t(ctx.k) - std::int64_t(current.size());
    for (std::int64_t next = current.back() + 1; next <= ctx.n - remaining + 1;
         ++next) {
        if (ctx.abort.load(std::memory_order_relaxed)) return;
        current.push_back(next);
        enumerate(ctx, scratch, current, std::gcd(g, next), out);
        current.pop_back();
    }
}

struct CheckpointState {
    std::int64_t next_partition = 0;  // ordinal into the partition list
    std::uint64_t count = 0, examined = 0, pruned = 0;
    bool truncated = false;
    std::vector<IntSet> witnesses;
};

void write_checkpoint(const std::string& path, int k, std::int64_t n,
                      const CheckpointState& state) {
    std::ofstream out(path, std::ios::trunc);
    out << kCheckpointHeader << '\n';
    out << "k " << k << '\n' << "n " << n << '\n';
    out << "partition " << state.next_partition - 1 << '\n';
    out << "count " << state.count << '\n';
    out << "examined " << state.examined << '\n';
    out << "pruned " << state.pruned << '\n';
    out << "truncated " << (state.truncated ? 1 : 0) << '\n';
    for (const IntSet& w : state.witnesses)
        out << "witness " << format_set(w) << '\n';
}

CheckpointState read_checkpoint(const std::string& path, int k,
                                std::int64_t n) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open checkpoint file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != kCheckpointHeader)
        throw std::invalid_argument("unrecognized checkpoint header in " + path);
    CheckpointState state;
    std::int64_t saved_k = -1, saved_n = -1, saved_partition = -1;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string key;
        row >> key;
        if (key == "k") row >> saved_k;
        else if (key == "n") row >> saved_n;
        else if (key == "partition") row >> saved_partition;
        else if (key == "count") row >> state.count;
        else if (key == "examined") row >> state.examined;
        else if (key == "pruned") row >> state.pruned;
        else if (key == "truncated") {
            int t = 0;
            row >> t;
            state.truncated = t != 0;
        } else if (key == "witness") {
            std::string literal;
            std::getline(row, literal);
            state.witnesses.push_back(parse_set_literal(literal).set);
        }
    }
    if (saved_k != k || saved_n != n)
        throw std::invalid_argument(
            "checkpoint was written for a different census (k=" +
            std::to_string(saved_k) + ", n=" + std::to_string(saved_n) + ")");
    state.next_partition = saved_partition + 1;
    return state;
}

}  // namespace

CensusResult census(int k, std::int64_t n, const CensusOptions& opts) {
    if (k < 1 || n < 1) throw std::invalid_argument("census requires k, n >= 1");
    if (opts.workers < 1) throw std::invalid_argument("workers must be >= 1");
    const auto start = std::chrono::steady_clock::now();

    CensusResult result;
    result.k = k;
    result.n = n;

    auto finish = [&](const CheckpointState& state) {
        result.count = state.count;
        result.truncated = state.truncated;
        result.witnesses = state.witnesses;
        result.stats.examined = state.examined;
        result.stats.pruned = state.pruned;
        result.stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        return result;
    };

    // Singletons have Δ = 0 and k > n+1 never fits; both are empty censuses.
    if (k == 1 || std::int64_t(k) > n + 1) {
        CheckpointState state;
        state.examined = (k == 1) ? 1 : 0;
        return finish(state);
    }

    // One partition per choice of the second-smallest element.
    std::vector<std::int64_t> partitions;
    for (std::int64_t p = 1; p + std::int64_t(k) - 2 <= n; ++p)
        partitions.push_back(p);

    CheckpointState state;
    if (opts.resume && !opts.checkpoint_path.empty())
        state = read_checkpoint(opts.checkpoint_path, k, n);

    SearchContext ctx(k, n, opts);
    std::vector<PartitionResult> results(partitions.size());
    std::atomic<std::size_t> next{std::size_t(state.next_partition)};
    std::mutex merge_mutex;
    std::size_t merge_frontier = std::size_t(state.next_partition);

    auto merge_prefix = [&]() {
        // Caller holds merge_mutex. Folds completed partitions into the
        // running state in index order so the result is deterministic.
        while (merge_frontier < results.size() &&
               results[merge_frontier].done) {
            PartitionResult& pr = results[merge_frontier];
            state.count += pr.count;
            state.examined += pr.examined;
            state.pruned += pr.pruned;
            for (IntSet& w : pr.witnesses) {
                if (state.witnesses.size() < opts.witness_cap)
                    state.witnesses.push_back(std::move(w));
                else
                    state.truncated = true;
            }
            ++merge_frontier;
            state.next_partition = std::int64_t(merge_frontier);
            if (!opts.checkpoint_path.empty())
                write_checkpoint(opts.checkpoint_path, k, n, state);
        }
    };

    auto run = [&]() {
        DeltaScratch scratch(n);
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= partitions.size() || ctx.abort.load()) return;
            std::vector<std::int64_t> current = {0, partitions[i]};
            current.reserve(std::size_t(k));
            enumerate(ctx, scratch, current, partitions[i], results[i]);
            if (ctx.abort.load()) return;
            std::lock_guard<std::mutex> lock(merge_mutex);
            results[i].done = true;
            merge_prefix();
        }
    };

    std::vector<std::thread> pool;
    const unsigned n_threads =
        std::min<unsigned>(opts.workers, std::max<std::size_t>(partitions.size(), 1));
    std::exception_ptr worker_error;
    std::mutex error_mutex;
    auto guarded_run = [&]() {
        try {
            run();
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!worker_error) worker_error = std::current_exception();
            ctx.abort.store(true);
        }
    };
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(guarded_run);
    guarded_run();
    for (auto& t : pool) t.join();
    if (worker_error) std::rethrow_exception(worker_error);

    if (ctx.abort.load()) {
        if (!opts.checkpoint_path.empty()) {
            std::lock_guard<std::mutex> lock(merge_mutex);
            write_checkpoint(opts.checkpoint_path, k, n, state);
        }
        throw resource_limit_error(
            "census aborted after examining more than " +
                std::to_string(opts.max_candidates) +
                " candidates; completed partitions: " +
                std::to_string(merge_frontier),
            merge_frontier);
    }

    return finish(state);
}

std::vector<std::uint64_t> census_monotone_check(int k, std::int64_t n_lo,
                                                 std::int64_t n_hi,
                                                 const CensusOptions& opts) {
    if (n_lo > n_hi) throw std::invalid_argument("census_monotone_check requires n_lo <= n_hi");
    CensusOptions quiet = opts;
    quiet.collect_witnesses = false;
    quiet.checkpoint_path.clear();
    std::vector<std::uint64_t> counts;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        counts.push_back(census(k, n, quiet).count);
        if (counts.size() >= 2 && counts[counts.size() - 1] < counts[counts.size() - 2])
            throw consistency_error(
                "H(k,n) decreased from n=" + std::to_string(n - 1) + " to n=" +
                std::to_string(n) + " (canonicalization bug)");
    }
    return counts;
}

std::vector<SmallestMstdRow> smallest_mstd_scan(int k_max, std::int64_t n_max,
                                                const CensusOptions& opts) {
    if (k_max < 1 || n_max < 1)
        throw std::invalid_argument("smallest_mstd_scan bounds must be positive");
    CensusOptions quiet = opts;
    quiet.collect_witnesses = false;
    quiet.checkpoint_path.clear();
    std::vector<SmallestMstdRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        SmallestMstdRow row;
        row.k = k;
        for (std::int64_t n = std::max<std::int64_t>(1, k - 1); n <= n_max; ++n) {
            if (census(k, n, quiet).count > 0) {
                row.smallest_n = n;
                break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace mstd

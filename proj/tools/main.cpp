// mstd: command-line explorer for sets with more sums than differences.
//
// Subcommands: analyze, census, construct, structure, profile, scan.
// Exit codes: 0 success, 2 parse error, 3 precondition/argument error,
// 4 resource cap or overflow, 5 internal consistency error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mstd/census.hpp"
#include "mstd/constructions.hpp"
#include "mstd/errors.hpp"
#include "mstd/format.hpp"
#include "mstd/intset.hpp"
#include "mstd/serialize.hpp"
#include "mstd/structure.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResource = 4;
constexpr int kExitConsistency = 5;

struct GlobalOptions {
    std::string format = "text";
    unsigned workers = 1;
    std::uint64_t seed = 0;  // reserved for randomized subcommands
    std::string output;
};

std::ostream& out_stream(const GlobalOptions& g, std::ofstream& file) {
    if (g.output.empty()) return std::cout;
    file.open(g.output, std::ios::trunc);
    if (!file) throw std::invalid_argument("cannot open output file: " + g.output);
    return file;
}

unsigned default_workers() {
    if (const char* env = std::getenv("MSTD_WORKERS")) {
        const long v = std::atol(env);
        if (v >= 1) return unsigned(v);
    }
    return 1;
}

std::vector<mstd::ParsedSet> gather_sets(const std::vector<std::string>& literals,
                                         const std::vector<std::string>& files) {
    std::vector<mstd::ParsedSet> sets;
    for (const auto& lit : literals) sets.push_back(mstd::parse_set_literal(lit));
    for (const auto& path : files) sets.push_back(mstd::parse_set_file(path));
    if (sets.empty())
        throw std::invalid_argument("no input sets: pass literals or --file");
    for (const auto& p : sets)
        for (const auto& w : p.warnings) std::cerr << "warning: " << w << "\n";
    return sets;
}

// ---------------------------------------------------------------- analyze --

void run_analyze(const GlobalOptions& g, const std::vector<std::string>& literals,
                 const std::vector<std::string>& files) {
    std::ofstream file;
    std::ostream& out = out_stream(g, file);
    auto sets = gather_sets(literals, files);

    mstd::json all = mstd::json::array();
    if (g.format == "csv")
        out << "set,size,sum_count,diff_count,delta,is_mstd,symmetric_witness,"
               "is_ap,canonical_form\n";
    for (const auto& parsed : sets) {
        const mstd::IntSet& a = parsed.set;
        const mstd::DeltaReport r = mstd::delta_report(a);
        const auto w = mstd::symmetry_witness(a);
        const bool ap = mstd::is_arithmetic_progression(a);
        const mstd::IntSet nf = mstd::normal_form(a);
        const mstd::CanonicalForm cf = mstd::canonical_form(a);
        if (g.format == "json") {
            mstd::json entry = mstd::to_json(r);
            entry["set"] = mstd::to_json(a);
            entry["size"] = a.size();
            entry["symmetric_witness"] =
                w ? mstd::json(*w) : mstd::json(nullptr);
            entry["is_arithmetic_progression"] = ap;
            entry["normal_form"] = mstd::to_json(nf);
            entry["canonical_form"] = mstd::to_json(cf.set);
            entry["orientation_flipped"] = cf.orientation_flipped;
            all.push_back(entry);
        } else if (g.format == "csv") {
            out << '"' << mstd::format_set(a) << "\"," << a.size() << ','
                << r.sum_count << ',' << r.diff_count << ',' << r.delta << ','
                << (r.is_mstd ? 1 : 0) << ','
                << (w ? std::to_string(*w) : std::string()) << ','
                << (ap ? 1 : 0) << ",\"" << mstd::format_set(cf.set) << "\"\n";
        } else {
            out << "A = " << mstd::format_set_pretty(a) << "\n";
            out << "  |A| = " << a.size() << ", |A+A| = " << r.sum_count
                << ", |A-A| = " << r.diff_count << ", Delta = " << r.delta
                << (r.is_mstd ? "  (MSTD)" : "") << "\n";
            out << "  A+A = " << mstd::format_set_pretty(mstd::sumset(a, a))
                << "\n";
            out << "  A-A = "
                << mstd::format_set_pretty(mstd::difference_set(a, a)) << "\n";
            if (w)
                out << "  symmetric about w = " << *w << "\n";
            else
                out << "  not symmetric\n";
            if (ap) out << "  arithmetic progression\n";
            out << "  normal form    = " << mstd::format_set(nf) << "\n";
            out << "  canonical form = " << mstd::format_set(cf.set)
                << (cf.orientation_flipped ? "  (flipped)" : "") << "\n";
        }
    }
    if (g.format == "json") out << all.dump(2) << "\n";
}

// ----------------------------------------------------------------- census --

void run_census(const GlobalOptions& g, int k, std::int64_t n, bool witnesses,
                const std::string& checkpoint, bool resume,
                std::uint64_t max_candidates) {
    std::ofstream file;
    std::ostream& out = out_stream(g, file);
    mstd::CensusOptions opts;
    opts.collect_witnesses = witnesses;
    opts.workers = g.workers;
    opts.checkpoint_path = checkpoint;
    opts.resume = resume;
    opts.max_candidates = max_candidates;
    const mstd::CensusResult result = mstd::census(k, n, opts);
    if (g.format == "json") {
        out << mstd::to_json(result).dump(2) << "\n";
    } else if (g.format == "csv") {
        out << "k,n,count,seconds\n" << mstd::census_csv_row(result) << "\n";
    } else {
        out << "H(" << k << "," << n << ") = " << result.count << "   ["
            << result.stats.examined << " candidates, " << result.stats.pruned
            << " pruned, " << result.stats.seconds << " s]\n";
        for (const auto& w : result.witnesses)
            out << "  " << mstd::format_set(w) << "\n";
        if (result.truncated)
            out << "  ... witness list truncated; count is exact\n";
    }
}

// -------------------------------------------------------------- construct --

void run_construct(const GlobalOptions& g, const std::string& literal, int n,
                   std::optional<std::int64_t> m, std::optional<std::int64_t> b,
                   int count, std::size_t cap) {
    std::ofstream file;
    std::ostream& out = out_stream(g, file);
    const mstd::IntSet base = mstd::normal_form(mstd::parse_set_literal(literal).set);
    const std::int64_t base_m = m.value_or(mstd::default_lift_base(base));
    const mstd::LiftParams params{base_m, n};
    const mstd::PredictedSizes predicted = mstd::predicted_sizes(base, n);

    if (!mstd::tower_condition(base, n))
        throw std::domain_error(
            "tower_condition fails for n = " + std::to_string(n) +
            ": |A+A|^n = " + predicted.sum_size.str() + " < " +
            mstd::BigInt(predicted.diff_size + predicted.set_size).str() +
            " = |A-A|^n + |A|^n");

    mstd::json provenance = {{"input", mstd::to_json(base)},
                             {"m", base_m},
                             {"n", n},
                             {"predicted", mstd::to_json(predicted)}};

    std::vector<mstd::IntSet> members;
    try {
        if (b) {
            members.push_back(mstd::mstd_tower(base, params, *b, cap));
            for (int i = 1; i < count; ++i)
                members.push_back(mstd::mstd_tower(base, params, *b + i, cap));
        } else {
            members = mstd::family(base, params, count, cap);
        }
    } catch (const mstd::resource_limit_error& e) {
        provenance["materialized"] = false;
        provenance["notice"] = std::string("materialization refused: ") + e.what();
        out << provenance.dump(2) << "\n";
        return;
    }

    provenance["materialized"] = true;
    mstd::json family_json = mstd::json::array();
    for (const auto& member : members) {
        const mstd::DeltaReport r = mstd::delta_report(member);
        family_json.push_back({{"b", member.max()},
                               {"size", member.size()},
                               {"sum_count", r.sum_count},
                               {"diff_count", r.diff_count},
                               {"delta", r.delta},
                               {"is_mstd", r.is_mstd}});
        if (g.format == "text") out << mstd::format_set(member) << "\n";
    }
    provenance["family"] = family_json;
    out << provenance.dump(2) << "\n";
}

// -------------------------------------------------- structure and profile --

void run_structure(const GlobalOptions& g, const std::string& literal,
                   std::optional<int> h_max) {
    std::ofstream file;
    std::ostream& out = out_stream(g, file);
    const mstd::IntSet a = mstd::normal_form(mstd::parse_set_literal(literal).set);
    const int horizon = h_max.value_or(mstd::default_fold_horizon(a));
    const mstd::StructureDecomposition dec = mstd::decompose(a, horizon);
    mstd::json result = mstd::to_json(dec);
    result["set"] = mstd::to_json(a);
    if (!dec.stabilized) {
        result["largest_h_tried"] = dec.verified_to;
        out << result.dump(2) << "\n";
        throw mstd::resource_limit_error(
            "decomposition did not stabilize within h_max = " +
                std::to_string(horizon),
            std::uint64_t(horizon));
    }
    const int h1 = mstd::h1_bound(dec, a.max());
    result["h1"] = h1;
    const mstd::SumDiffStructure sds = mstd::sum_diff_structure(a, 2 * h1);
    result["sum_diff"] = mstd::to_json(sds);
    out << result.dump(2) << "\n";
}

void run_profile(const GlobalOptions& g, const std::string& literal, int h) {
    std::ofstream file;
    std::ostream& out = out_stream(g, file);
    const mstd::IntSet a = mstd::parse_set_literal(literal).set;
    const mstd::SumDiffProfile p = mstd::profile(a, h);
    if (g.format == "json") {
        mstd::json result = mstd::to_json(p);
        result["set"] = mstd::to_json(a);
        out << result.dump(2) << "\n";
    } else {
        out << mstd::profile_csv(p);
        if (g.format == "text")
            out << "# unimodal=" << (p.is_unimodal ? 1 : 0)
                << " max_at_middle=" << (p.max_at_middle ? 1 : 0) << "\n";
    }
}

// ------------------------------------------------------------------- scan --

void run_scan(const GlobalOptions& g, const std::string& mode, int k_max,
              std::int64_t n_max, int h, int k, std::int64_t n_lo,
              std::int64_t n_hi) {
    std::ofstream file;
    std::ostream& out = out_stream(g, file);
    mstd::CensusOptions opts;
    opts.workers = g.workers;
    if (mode == "unimodal") {
        const mstd::UnimodalityReport report =
            mstd::unimodality_scan(k_max, n_max, h, g.workers);
        if (g.format == "json") {
            out << mstd::to_json(report).dump(2) << "\n";
        } else {
            out << "scanned " << report.sets_scanned << " normalized sets, "
                << report.violations.size() << " violations\n";
            for (const auto& v : report.violations) {
                out << "  " << mstd::format_set(v.set) << "  [";
                if (v.violates_unimodality) out << "not-unimodal ";
                if (v.violates_max_at_middle) out << "max-not-at-middle";
                out << "]\n";
            }
        }
    } else if (mode == "smallest") {
        const auto rows = mstd::smallest_mstd_scan(k_max, n_max, opts);
        if (g.format == "csv") out << "k,smallest_n\n";
        for (const auto& row : rows) {
            if (g.format == "csv")
                out << row.k << ','
                    << (row.smallest_n ? std::to_string(*row.smallest_n)
                                       : std::string())
                    << "\n";
            else
                out << "k=" << row.k << ": "
                    << (row.smallest_n
                            ? "smallest n = " + std::to_string(*row.smallest_n)
                            : "none <= " + std::to_string(n_max))
                    << "\n";
        }
    } else if (mode == "monotone") {
        const auto counts = mstd::census_monotone_check(k, n_lo, n_hi, opts);
        if (g.format == "csv") out << "n,count\n";
        for (std::size_t i = 0; i < counts.size(); ++i) {
            const std::int64_t n = n_lo + std::int64_t(i);
            if (g.format == "csv")
                out << n << ',' << counts[i] << "\n";
            else
                out << "H(" << k << "," << n << ") = " << counts[i] << "\n";
        }
    } else {
        throw std::invalid_argument("unknown scan mode: " + mode);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MSTD set explorer: sumset arithmetic, affine census, "
                 "constructive families, and sumset structure"};
    app.require_subcommand(1);

    GlobalOptions g;
    g.workers = default_workers();
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--workers", g.workers,
                   "Worker threads (default from MSTD_WORKERS)");
    app.add_option("--seed", g.seed,
                   "Seed for randomized subcommands (reserved)");
    app.add_option("-o,--output", g.output, "Write output to a file");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Report sums, differences, "
                                                  "Delta, symmetry, canonical form");
    std::vector<std::string> literals, set_files;
    analyze->add_option("sets", literals, "Set literals, e.g. \"0,2,3\"");
    analyze->add_option("--file", set_files, "Set files, one integer per line");

    // census
    auto* census_cmd = app.add_subcommand("census", "Count affinely inequivalent "
                                                    "MSTD sets: H(k,n)");
    int census_k = 0;
    std::int64_t census_n = 0;
    bool census_witnesses = false, census_resume = false;
    std::string census_checkpoint;
    std::uint64_t census_max = 0;
    census_cmd->add_option("-k", census_k, "Cardinality")->required();
    census_cmd->add_option("-n", census_n, "Interval bound [0,n]")->required();
    census_cmd->add_flag("--witnesses", census_witnesses, "Collect witnesses");
    census_cmd->add_option("--checkpoint", census_checkpoint, "Checkpoint file");
    census_cmd->add_flag("--resume", census_resume, "Resume from checkpoint");
    census_cmd->add_option("--max", census_max,
                           "Abort after this many candidates (0 = unlimited)");

    // construct
    auto* construct = app.add_subcommand("construct", "Digit-lift towers of "
                                                      "MSTD sets");
    std::string construct_set = "0,2,3,4,7,11,12,14";
    int construct_n = 3, construct_count = 1;
    std::optional<std::int64_t> construct_m, construct_b;
    std::size_t construct_cap = mstd::kDefaultMaterializeCap;
    construct->add_option("--set", construct_set, "MSTD base set")
        ->capture_default_str();
    construct->add_option("-n", construct_n, "Number of digits")
        ->capture_default_str();
    construct->add_option("-m", construct_m, "Base (default 2*max(A)+1)");
    construct->add_option("-b", construct_b,
                          "Appended far element (default 2*max(B)+1)");
    construct->add_option("--count", construct_count, "Family size")
        ->capture_default_str();
    construct->add_option("--max-materialize", construct_cap,
                          "Materialization cap in elements")
        ->capture_default_str();

    // structure
    auto* structure = app.add_subcommand("structure", "Empirical three-part "
                                                      "decomposition of hA");
    std::string structure_set;
    std::optional<int> structure_hmax;
    structure->add_option("--set", structure_set, "Input set")->required();
    structure->add_option("--hmax", structure_hmax,
                          "Fold horizon (default max(2*max(A), 10))");

    // profile
    auto* profile_cmd = app.add_subcommand("profile", "f(j) = |(h-j)A - jA| "
                                                      "for j = 0..h");
    std::string profile_set;
    int profile_h = 2;
    profile_cmd->add_option("--set", profile_set, "Input set")->required();
    profile_cmd->add_option("--fold", profile_h, "h")->capture_default_str();

    // scan
    auto* scan = app.add_subcommand("scan", "Exhaustive scans: unimodality, "
                                            "smallest MSTD, monotonicity");
    std::string scan_mode = "unimodal";
    int scan_kmax = 8, scan_h = 2, scan_k = 8;
    std::int64_t scan_nmax = 14, scan_nlo = 1, scan_nhi = 14;
    scan->add_option("--mode", scan_mode, "unimodal | smallest | monotone")
        ->check(CLI::IsMember({"unimodal", "smallest", "monotone"}))
        ->capture_default_str();
    scan->add_option("--kmax", scan_kmax, "Max cardinality")->capture_default_str();
    scan->add_option("--nmax", scan_nmax, "Max element")->capture_default_str();
    scan->add_option("--fold", scan_h, "h for unimodality profiles")
        ->capture_default_str();
    scan->add_option("-k", scan_k, "Cardinality for monotone mode")
        ->capture_default_str();
    scan->add_option("--nlo", scan_nlo, "Lower n for monotone mode")
        ->capture_default_str();
    scan->add_option("--nhi", scan_nhi, "Upper n for monotone mode")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) run_analyze(g, literals, set_files);
        if (*census_cmd)
            run_census(g, census_k, census_n, census_witnesses,
                       census_checkpoint, census_resume, census_max);
        if (*construct)
            run_construct(g, construct_set, construct_n, construct_m,
                          construct_b, construct_count, construct_cap);
        if (*structure) run_structure(g, structure_set, structure_hmax);
        if (*profile_cmd) run_profile(g, profile_set, profile_h);
        if (*scan)
            run_scan(g, scan_mode, scan_kmax, scan_nmax, scan_h, scan_k,
                     scan_nlo, scan_nhi);
    } catch (const mstd::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const mstd::consistency_error& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const mstd::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::range_error& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mstd/census.hpp"
#include "mstd/constructions.hpp"
#include "mstd/format.hpp"
#include "mstd/intset.hpp"
#include "mstd/structure.hpp"

namespace mstd {

using json = nlohmann::json;

inline json to_json(const IntSet& a) { return json(a.elements()); }

inline json to_json(const DeltaReport& r) {
    return {{"sum_count", r.sum_count},
            {"diff_count", r.diff_count},
            {"delta", r.delta},
            {"is_mstd", r.is_mstd}};
}

inline json to_json(const SumDiffProfile& p) {
    return {{"h", p.h},
            {"counts", p.counts},
            {"is_unimodal", p.is_unimodal},
            {"max_at_middle", p.max_at_middle}};
}

inline json to_json(const StructureDecomposition& d) {
    json out = {{"stabilized", d.stabilized}, {"verified_to", d.verified_to},
                {"empirical_up_to", d.verified_to}};
    if (d.stabilized) {
        out["h0"] = d.h0;
        out["C"] = d.low_cut;
        out["D"] = d.high_cut;
        out["frag_low"] = to_json(d.frag_low);
        out["frag_high"] = to_json(d.frag_high);
    }
    return out;
}

inline json to_json(const SumDiffStructure& s) {
    return {{"h1", s.h1},
            {"frag_low_star", to_json(s.frag_low_star)},
            {"frag_high_star", to_json(s.frag_high_star)}};
}

inline json to_json(const CensusResult& r) {
    json witnesses = json::array();
    for (const IntSet& w : r.witnesses) witnesses.push_back(to_json(w));
    return {{"k", r.k},
            {"n", r.n},
            {"count", r.count},
            {"truncated", r.truncated},
            {"witnesses", witnesses},
            {"stats",
             {{"examined", r.stats.examined},
              {"pruned", r.stats.pruned},
              {"seconds", r.stats.seconds}}}};
}

inline json to_json(const PredictedSizes& p) {
    // Big integers serialize as decimal strings; they exceed 64 bits quickly.
    return {{"set_size", p.set_size.str()},
            {"sum_size", p.sum_size.str()},
            {"diff_size", p.diff_size.str()}};
}

inline json to_json(const UnimodalityReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"set", to_json(v.set)},
                              {"counts", v.profile.counts},
                              {"violates_unimodality", v.violates_unimodality},
                              {"violates_max_at_middle", v.violates_max_at_middle}});
    return {{"sets_scanned", r.sets_scanned}, {"violations", violations}};
}

/// One row per j: "j,count".
inline std::string profile_csv(const SumDiffProfile& p) {
    std::string out = "j,count\n";
    for (std::size_t j = 0; j < p.counts.size(); ++j)
        out += std::to_string(j) + "," + std::to_string(p.counts[j]) + "\n";
    return out;
}

/// Summary row: "k,n,count,seconds".
inline std::string census_csv_row(const CensusResult& r) {
    return std::to_string(r.k) + "," + std::to_string(r.n) + "," +
           std::to_string(r.count) + "," + std::to_string(r.stats.seconds);
}

}  // namespace mstd

#pragma once

#include <json.hpp>

#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "face_lattice.hpp"
#include "hasse.hpp"
#include "homology.hpp"
#include "matching.hpp"

namespace hypermorse {

using Json = nlohmann::ordered_json;

// {"label": ..., "dim": ..., "s0": ..., "s1": ...}; the empty face spells
// "empty" and counts as zero symbols.
inline Json face_record(const HypersimplexParams& p, const FaceLabel& f) {
    Json j;
    j["label"] = to_machine_text(f);
    j["dim"] = dimension(p, f);
    j["s0"] = f.is_empty() ? 0 : static_cast<int>(count_zeros(f));
    j["s1"] = f.is_empty() ? 0 : static_cast<int>(count_ones(f));
    return j;
}

inline Json matching_json(const HypersimplexParams& p, const MatchParams& mp,
                          const MorseMatching& matching) {
    Json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["m0"] = mp.m0;
    j["m1"] = mp.m1;
    Json pairs = Json::array();
    for (const auto& pr : matching.pairs()) {
        Json e;
        e["lower"] = to_machine_text(pr.lower);
        e["upper"] = to_machine_text(pr.upper);
        if (pr.rule) e["rule"] = rule_name(*pr.rule);
        pairs.push_back(std::move(e));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

inline Json report_json(const VerificationReport& r) {
    Json j;
    j["complete"] = r.complete;
    j["involution"] = r.involution;
    j["codimension"] = r.codimension;
    j["anchor"] = r.anchor;
    j["type_constraints"] = r.type_constraints;
    return j;
}

// {"acyclic": ..., "witness": [...]|null, "census": {"0": u0, ...}}
inline Json verdict_json(const std::optional<std::vector<FaceLabel>>& witness,
                         const MorseCensus& census) {
    Json j;
    j["acyclic"] = !witness.has_value();
    if (witness) {
        Json w = Json::array();
        for (const FaceLabel& f : *witness) w.push_back(to_machine_text(f));
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    Json c = Json::object();
    for (const auto& [dim, count] : census.unmatched) c[std::to_string(dim)] = count;
    j["census"] = std::move(c);
    return j;
}

inline Json homology_json(const std::map<int, HomologyGroup>& groups) {
    Json list = Json::array();
    for (const auto& [degree, group] : groups) {
        Json g;
        g["degree"] = degree;
        g["betti"] = group.betti;
        Json t = Json::array();
        for (const BigInt& f : group.torsion) {
            if (f <= BigInt(std::numeric_limits<long long>::max()))
                t.push_back(static_cast<long long>(f));
            else
                t.push_back(f.str());
        }
        g["torsion"] = std::move(t);
        list.push_back(std::move(g));
    }
    return list;
}

}  // namespace hypermorse

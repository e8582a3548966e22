#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "face_lattice.hpp"

namespace hypermorse {

// The two knobs of the matching family. Valid range depends on (n,k):
// 0 <= m0 <= n-k-1 and 1 <= m1 <= k-1, which requires k >= 2.
struct MatchParams {
    int m0 = 0;
    int m1 = 1;
};

inline void validate_match_params(const HypersimplexParams& p, const MatchParams& mp) {
    if (p.k < 2)
        throw std::invalid_argument(
            "matchings are only defined for k >= 2 (the parameter range for m1 is empty "
            "when k = 1); got k = " +
            std::to_string(p.k));
    if (mp.m0 < 0 || mp.m0 > p.n - p.k - 1)
        throw std::invalid_argument("m0 = " + std::to_string(mp.m0) + " outside 0.." +
                                    std::to_string(p.n - p.k - 1));
    if (mp.m1 < 1 || mp.m1 > p.k - 1)
        throw std::invalid_argument("m1 = " + std::to_string(mp.m1) + " outside 1.." +
                                    std::to_string(p.k - 1));
}

// Identity of the rule that pairs a face with its partner. Rules 1, 3, 5, 7
// and 9 raise dimension by one; rules 2, 4, 6, 8 and 10 lower it. V0Anchor
// covers only the pair (empty face, v0).
enum class RuleId {
    r1a,
    r1b,
    r1c,
    r2a,
    r2b,
    r2c,
    r3,
    r4,
    r5,
    r6,
    r7,
    r8,
    r9,
    r10,
    v0_anchor,
};

inline const char* rule_name(RuleId r) {
    switch (r) {
    case RuleId::r1a: return "R1a";
    case RuleId::r1b: return "R1b";
    case RuleId::r1c: return "R1c";
    case RuleId::r2a: return "R2a";
    case RuleId::r2b: return "R2b";
    case RuleId::r2c: return "R2c";
    case RuleId::r3: return "R3";
    case RuleId::r4: return "R4";
    case RuleId::r5: return "R5";
    case RuleId::r6: return "R6";
    case RuleId::r7: return "R7";
    case RuleId::r8: return "R8";
    case RuleId::r9: return "R9";
    case RuleId::r10: return "R10";
    case RuleId::v0_anchor: return "V0Anchor";
    }
    return "?";
}

inline bool is_raising_rule(RuleId r) {
    switch (r) {
    case RuleId::r1a:
    case RuleId::r1b:
    case RuleId::r1c:
    case RuleId::r3:
    case RuleId::r5:
    case RuleId::r7:
    case RuleId::r9:
        return true;
    default:
        return false;
    }
}

namespace detail {

inline std::optional<std::size_t> leftmost(const FaceLabel& s, Symbol what) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.at(i) == what) return i;
    return std::nullopt;
}

inline std::optional<std::size_t> rightmost(const FaceLabel& s, Symbol what) {
    for (std::size_t i = s.size(); i > 0; --i)
        if (s.at(i - 1) == what) return i - 1;
    return std::nullopt;
}

// "There is a 1 to the right of the rightmost *". Vacuously false on a
// star-free word.
inline bool one_right_of_rightmost_star(const FaceLabel& s) {
    const auto r = rightmost(s, Symbol::star);
    if (!r) return false;
    for (std::size_t i = *r + 1; i < s.size(); ++i)
        if (s.at(i) == Symbol::one) return true;
    return false;
}

// "There is a 0 to the left of the leftmost *". Vacuously false on a
// star-free word.
inline bool zero_left_of_leftmost_star(const FaceLabel& s) {
    const auto l = leftmost(s, Symbol::star);
    if (!l) return false;
    for (std::size_t i = 0; i < *l; ++i)
        if (s.at(i) == Symbol::zero) return true;
    return false;
}

}  // namespace detail

// Assigns each canonical face other than the empty face its unique rule.
// Implemented as the decision tree that proves the ten rule guards partition
// the faces: branch on star presence, then on the 1-right-of-rightmost-star
// test, then on the counts against k, m0, m1 and the
// 0-left-of-leftmost-star test. The distinguished vertex v0 maps to
// V0Anchor.
inline RuleId classify(const HypersimplexParams& p, const MatchParams& mp,
                       const FaceLabel& face) {
    validate_match_params(p, mp);
    if (face.is_empty()) throw std::invalid_argument("classify: the empty face has no rule");
    if (!is_canonical(p, face))
        throw std::invalid_argument("classify: label " + to_text(face) + " is not canonical");

    if (face == v0_label(p)) return RuleId::v0_anchor;

    const int s1 = static_cast<int>(face.count(Symbol::one));
    const int s0 = static_cast<int>(face.count(Symbol::zero));
    const int stars = static_cast<int>(face.count(Symbol::star));
    if (stars == 0) return RuleId::r9;  // star-free words satisfy only rule 9

    const bool one_right = detail::one_right_of_rightmost_star(face);
    const bool zero_left = detail::zero_left_of_leftmost_star(face);

    if (one_right) {
        if (s1 != mp.m1) return RuleId::r1a;
        if (s0 > mp.m0) return RuleId::r1b;
        if (zero_left) return RuleId::r5;
        if (s0 == mp.m0) return RuleId::r1c;
        return RuleId::r6;
    }
    if (s1 == p.k - 1) {
        if (zero_left) return RuleId::r3;
        if (s0 <= p.n - p.k - 2) return RuleId::r4;
        return RuleId::r10;
    }
    if (s1 != mp.m1 - 1) return RuleId::r2a;
    if (s0 > mp.m0) return RuleId::r2b;
    if (zero_left) return RuleId::r7;
    if (s0 == mp.m0) return RuleId::r2c;
    return RuleId::r8;
}

// Evaluates every rule guard independently and returns all that hold. For
// canonical faces other than v0 this must be a single rule equal to
// classify(); for v0 it is empty. Used to check the partition property
// structurally rather than trusting the decision tree.
inline std::vector<RuleId> rules_satisfied(const HypersimplexParams& p, const MatchParams& mp,
                                           const FaceLabel& face) {
    validate_match_params(p, mp);
    if (face.is_empty()) throw std::invalid_argument("rules_satisfied: empty face");
    if (!is_canonical(p, face))
        throw std::invalid_argument("rules_satisfied: label is not canonical");

    const int s1 = static_cast<int>(face.count(Symbol::one));
    const int s0 = static_cast<int>(face.count(Symbol::zero));
    const bool one_right = detail::one_right_of_rightmost_star(face);
    const bool zero_left = detail::zero_left_of_leftmost_star(face);
    const bool is_v0 = face == v0_label(p);

    std::vector<RuleId> out;
    // (1) S(1) <= k-1, a 1 right of the rightmost *
    if (s1 <= p.k - 1 && one_right) {
        if (s1 != mp.m1) out.push_back(RuleId::r1a);
        if (s1 == mp.m1 && s0 > mp.m0) out.push_back(RuleId::r1b);
        if (s1 == mp.m1 && s0 == mp.m0 && !zero_left) out.push_back(RuleId::r1c);
    }
    // (2) S(1) <= k-2, no 1 right of the rightmost *
    if (s1 <= p.k - 2 && !one_right && face.count(Symbol::star) > 0) {
        if (s1 != mp.m1 - 1) out.push_back(RuleId::r2a);
        if (s1 == mp.m1 - 1 && s0 > mp.m0) out.push_back(RuleId::r2b);
        if (s1 == mp.m1 - 1 && s0 == mp.m0 && !zero_left) out.push_back(RuleId::r2c);
    }
    // (3)
    if (s1 == p.k - 1 && s0 <= p.n - p.k - 1 && !one_right && zero_left)
        out.push_back(RuleId::r3);
    // (4)
    if (s1 == p.k - 1 && s0 <= p.n - p.k - 2 && !one_right && !zero_left &&
        face.count(Symbol::star) > 0)
        out.push_back(RuleId::r4);
    // (5)
    if (s1 == mp.m1 && s0 <= mp.m0 && one_right && zero_left) out.push_back(RuleId::r5);
    // (6)
    if (s1 == mp.m1 && s0 < mp.m0 && one_right && !zero_left) out.push_back(RuleId::r6);
    // (7)
    if (s1 == mp.m1 - 1 && s0 <= mp.m0 && !one_right && zero_left) out.push_back(RuleId::r7);
    // (8)
    if (s1 == mp.m1 - 1 && s0 < mp.m0 && !one_right && !zero_left &&
        face.count(Symbol::star) > 0)
        out.push_back(RuleId::r8);
    // (9)
    if (s1 == p.k && s0 == p.n - p.k && !is_v0) out.push_back(RuleId::r9);
    // (10)
    if (s1 == p.k - 1 && s0 == p.n - p.k - 1 && !one_right && !zero_left &&
        face.count(Symbol::star) > 0)
        out.push_back(RuleId::r10);
    return out;
}

// The matched partner of a face under its rule. An involution on the set of
// all faces: partner(partner(face)) == face, with the empty face and v0
// paired by the anchor.
inline FaceLabel partner(const HypersimplexParams& p, const MatchParams& mp,
                         const FaceLabel& face) {
    validate_match_params(p, mp);
    if (face.is_empty()) return v0_label(p);

    const RuleId rule = classify(p, mp, face);
    FaceLabel out;
    switch (rule) {
    case RuleId::v0_anchor:
        return FaceLabel::empty();
    case RuleId::r1a:
    case RuleId::r1b:
    case RuleId::r1c:
        out = face.with(*detail::rightmost(face, Symbol::one), Symbol::star);
        break;
    case RuleId::r2a:
    case RuleId::r2b:
    case RuleId::r2c:
        out = face.with(*detail::rightmost(face, Symbol::star), Symbol::one);
        break;
    case RuleId::r3:
    case RuleId::r5:
    case RuleId::r7:
        out = face.with(*detail::leftmost(face, Symbol::zero), Symbol::star);
        break;
    case RuleId::r4:
    case RuleId::r6:
    case RuleId::r8:
        out = face.with(*detail::leftmost(face, Symbol::star), Symbol::zero);
        break;
    case RuleId::r9:
        out = face.with(*detail::leftmost(face, Symbol::zero), Symbol::star)
                  .with(*detail::rightmost(face, Symbol::one), Symbol::star);
        break;
    case RuleId::r10: {
        if (face.count(Symbol::star) != 2)
            throw std::logic_error("rule 10 fired on a face with " +
                                   std::to_string(face.count(Symbol::star)) + " stars");
        out = face.with(*detail::leftmost(face, Symbol::star), Symbol::zero)
                  .with(*detail::rightmost(face, Symbol::star), Symbol::one);
        if (out == v0_label(p))
            throw std::logic_error("rule 10 produced v0 from " + to_text(face));
        break;
    }
    }
    if (!is_canonical(p, out))
        throw std::logic_error("rule " + std::string(rule_name(rule)) +
                               " produced a non-canonical label from " + to_text(face));
    return out;
}

// A claimed matching: a list of (lower, upper) pairs, optionally tagged with
// the rule that produced them. Invariants (each cell in exactly one pair,
// codimension one, anchor present) are checked by verify_matching rather
// than enforced here, so that defective matchings can be represented and
// diagnosed.
class MorseMatching {
public:
    struct Pair {
        FaceLabel lower;
        FaceLabel upper;
        std::optional<RuleId> rule;
    };

    MorseMatching() = default;

    explicit MorseMatching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
        std::sort(pairs_.begin(), pairs_.end(),
                  [](const Pair& a, const Pair& b) { return a.lower < b.lower; });
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            by_cell_.emplace(pairs_[i].lower, i);
            by_cell_.emplace(pairs_[i].upper, i);
        }
    }

    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }

    bool contains_cell(const FaceLabel& f) const { return by_cell_.count(f) > 0; }

    std::optional<FaceLabel> partner_of(const FaceLabel& f) const {
        const auto it = by_cell_.find(f);
        if (it == by_cell_.end()) return std::nullopt;
        const Pair& pr = pairs_[it->second];
        return pr.lower == f ? pr.upper : pr.lower;
    }

    bool is_matched_pair(const FaceLabel& lower, const FaceLabel& upper) const {
        const auto it = by_cell_.find(lower);
        if (it == by_cell_.end()) return false;
        const Pair& pr = pairs_[it->second];
        return pr.lower == lower && pr.upper == upper;
    }

    // true when f is the lower cell of its pair (matched to a face one
    // dimension up)
    bool is_lower_cell(const FaceLabel& f) const {
        const auto it = by_cell_.find(f);
        return it != by_cell_.end() && pairs_[it->second].lower == f;
    }

private:
    std::vector<Pair> pairs_;
    std::map<FaceLabel, std::size_t> by_cell_;  // first occurrence wins
};

// Builds the complete matching for (m0, m1): the anchor pair (empty, v0)
// plus, for every face whose rule raises dimension, the pair with its
// partner. Faces whose rule lowers dimension are covered by their partner's
// pair. Rejects k = 1, where the parameter range is empty.
inline MorseMatching build_matching(const HypersimplexParams& p, const MatchParams& mp) {
    validate_match_params(p, mp);
    const FaceSet faces = enumerate_faces(p);
    const FaceLabel anchor_vertex = v0_label(p);

    std::vector<MorseMatching::Pair> pairs;
    pairs.push_back({FaceLabel::empty(), anchor_vertex, RuleId::v0_anchor});
    for (int d = 0; d <= faces.top_dimension(); ++d) {
        for (const FaceLabel& face : faces.of_dim(d)) {
            if (face == anchor_vertex) continue;
            const RuleId rule = classify(p, mp, face);
            if (is_raising_rule(rule)) pairs.push_back({face, partner(p, mp, face), rule});
        }
    }

    MorseMatching matching(std::move(pairs));
    if (2 * matching.size() != faces.total_cells())
        throw std::logic_error("matching does not cover every face exactly once");
    return matching;
}

// Machine check of the matching invariants, each reported separately.
struct VerificationReport {
    bool complete = false;
    bool involution = false;
    bool codimension = false;
    bool anchor = false;
    bool type_constraints = false;
    std::vector<std::string> problems;

    bool all_ok() const {
        return complete && involution && codimension && anchor && type_constraints;
    }
};

inline VerificationReport verify_matching(const HypersimplexParams& p, const MatchParams& mp,
                                          const MorseMatching& matching) {
    validate_match_params(p, mp);
    for (const auto& pr : matching.pairs()) {
        for (const FaceLabel* f : {&pr.lower, &pr.upper})
            if (!f->is_empty() && static_cast<int>(f->size()) != p.n)
                throw std::invalid_argument("matching contains label " + to_text(*f) +
                                            " of the wrong length for n = " +
                                            std::to_string(p.n));
    }

    VerificationReport report;
    const FaceSet faces = enumerate_faces(p);
    const FaceLabel anchor_vertex = v0_label(p);

    // completeness: every face of J(n,k), including the empty face, occurs
    // in exactly one pair
    {
        std::map<FaceLabel, int> seen;
        for (const auto& pr : matching.pairs()) {
            ++seen[pr.lower];
            ++seen[pr.upper];
        }
        bool ok = true;
        for (int d = -1; d <= faces.top_dimension(); ++d) {
            for (const FaceLabel& face : faces.of_dim(d)) {
                const auto it = seen.find(face);
                const int c = it == seen.end() ? 0 : it->second;
                if (c != 1) {
                    ok = false;
                    report.problems.push_back("face " + to_text(face) + " occurs in " +
                                              std::to_string(c) + " pairs");
                }
                if (it != seen.end()) seen.erase(it);
            }
        }
        for (const auto& [face, c] : seen) {
            ok = false;
            report.problems.push_back("pair cell " + to_text(face) + " is not a face");
        }
        report.complete = ok;
    }

    // involution: each pair is reproduced by the rules in both directions
    {
        bool ok = true;
        for (const auto& pr : matching.pairs()) {
            try {
                if (pr.lower.is_empty()) {
                    if (pr.upper != anchor_vertex) ok = false;
                } else if (partner(p, mp, pr.lower) != pr.upper ||
                           partner(p, mp, pr.upper) != pr.lower) {
                    ok = false;
                }
            } catch (const std::exception& e) {
                ok = false;
                report.problems.push_back(std::string("involution check failed: ") + e.what());
            }
        }
        report.involution = ok;
    }

    // codimension: lower is a facet of upper in every pair
    {
        bool ok = true;
        for (const auto& pr : matching.pairs()) {
            try {
                const std::vector<FaceLabel> fs = facets(p, pr.upper);
                if (!std::binary_search(fs.begin(), fs.end(), pr.lower)) {
                    ok = false;
                    report.problems.push_back("pair (" + to_text(pr.lower) + ", " +
                                              to_text(pr.upper) + ") is not codimension 1");
                }
            } catch (const std::exception&) {
                ok = false;
            }
        }
        report.codimension = ok;
    }

    report.anchor = matching.is_matched_pair(FaceLabel::empty(), anchor_vertex);

    // faces of types 1-8 and 10 cannot be vertices: fewer than n-k zeros,
    // fewer than k ones, at least two stars
    {
        bool ok = true;
        for (const auto& pr : matching.pairs()) {
            for (const FaceLabel* f : {&pr.lower, &pr.upper}) {
                if (f->is_empty() || !is_canonical(p, *f)) continue;
                const RuleId rule = classify(p, mp, *f);
                if (rule == RuleId::r9 || rule == RuleId::v0_anchor) continue;
                if (static_cast<int>(f->count(Symbol::zero)) >= p.n - p.k ||
                    static_cast<int>(f->count(Symbol::one)) >= p.k ||
                    f->count(Symbol::star) < 2) {
                    ok = false;
                    report.problems.push_back("face " + to_text(*f) + " of type " +
                                              rule_name(rule) + " violates the type bounds");
                }
            }
        }
        report.type_constraints = ok;
    }

    return report;
}

}  // namespace hypermorse

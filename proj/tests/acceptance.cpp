// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hypermorse/face_lattice.hpp"
#include "hypermorse/hasse.hpp"
#include "hypermorse/homology.hpp"
#include "hypermorse/matching.hpp"
#include "support.hpp"

using namespace hypermorse;

namespace {

int failures = 0;

template <typename Fn>
void criterion(int number, const std::string& title, Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%s; %.1fs)\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
}

struct FamilyInstance {
    int n, k, m0, m1;
};

std::vector<FamilyInstance> family_instances(int max_n) {
    std::vector<FamilyInstance> out;
    for (int n = 3; n <= max_n; ++n)
        for (int k = 2; k <= n - 1; ++k)
            for (int m0 = 0; m0 <= n - k - 1; ++m0)
                for (int m1 = 1; m1 <= k - 1; ++m1) out.push_back({n, k, m0, m1});
    return out;
}

FaceLabel lab(const std::string& text, int n) { return parse_label(text, n); }

bool criterion1(std::string& detail) {
    const auto instances = family_instances(7);
    for (const auto& inst : instances) {
        const HypersimplexParams p(inst.n, inst.k);
        const MatchParams mp{inst.m0, inst.m1};
        const MorseMatching matching = build_matching(p, mp);
        const VerificationReport report = verify_matching(p, mp, matching);
        if (!report.all_ok()) {
            detail = "verification failed on J(" + std::to_string(inst.n) + "," +
                     std::to_string(inst.k) + ") m0=" + std::to_string(inst.m0) +
                     " m1=" + std::to_string(inst.m1);
            return false;
        }
        if (detect_cycle(build_hasse(p, matching)).has_value()) {
            detail = "cycle found on J(" + std::to_string(inst.n) + "," +
                     std::to_string(inst.k) + ") m0=" + std::to_string(inst.m0) +
                     " m1=" + std::to_string(inst.m1);
            return false;
        }
    }
    detail = std::to_string(instances.size()) + " instances complete+acyclic, n <= 7";
    return true;
}

bool criterion2(std::string& detail) {
    const HypersimplexParams p(8, 3);
    const MatchParams mp{2, 1};
    const MorseMatching matching = build_matching(p, mp);

    struct Fixture {
        const char* lower;
        const char* upper;
        RuleId up_rule;
        RuleId down_rule;
    };
    const std::vector<Fixture> fixtures = {
        {"0100*0*1", "0100*0**", RuleId::r1a, RuleId::r2a},
        {"0*00*0*1", "0*00*0**", RuleId::r1b, RuleId::r2b},
        {"***0*0*1", "***0*0**", RuleId::r1c, RuleId::r2c},
        {"0100*1*0", "*100*1*0", RuleId::r3, RuleId::r4},
        {"0****0*1", "*****0*1", RuleId::r5, RuleId::r6},
        {"0****0**", "*****0**", RuleId::r7, RuleId::r8},
        {"10010100", "1*010*00", RuleId::r9, RuleId::r10},
    };
    for (const Fixture& fx : fixtures) {
        const FaceLabel lower = lab(fx.lower, 8);
        const FaceLabel upper = lab(fx.upper, 8);
        if (classify(p, mp, lower) != fx.up_rule || classify(p, mp, upper) != fx.down_rule) {
            detail = std::string("rule mismatch on ") + fx.lower;
            return false;
        }
        if (partner(p, mp, lower) != upper || partner(p, mp, upper) != lower) {
            detail = std::string("partner mismatch on ") + fx.lower;
            return false;
        }
        if (!matching.is_matched_pair(lower, upper)) {
            detail = std::string("pair missing from the matching: ") + fx.lower;
            return false;
        }
        bool tagged = false;
        for (const auto& pr : matching.pairs())
            if (pr.lower == lower && pr.rule && *pr.rule == fx.up_rule) tagged = true;
        if (!tagged) {
            detail = std::string("pair tag mismatch on ") + fx.lower;
            return false;
        }
    }
    detail = "all 7 published pairs with exact rule identifiers, J(8,3) m0=2 m1=1";
    return true;
}

bool criterion3(std::string& detail) {
    int checked = 0;
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            const HypersimplexParams p(n, k);
            const FaceSet faces = enumerate_faces(p);
            if (faces.of_dim(-1).size() != 1) {
                detail = "empty-face count wrong";
                return false;
            }
            if (faces.of_dim(0).size() != binomial(n, k)) {
                detail = "vertex count mismatch on J(" + std::to_string(n) + "," +
                         std::to_string(k) + ")";
                return false;
            }
            for (int d = 1; d <= faces.top_dimension(); ++d) {
                if (faces.of_dim(d).size() != face_count_formula(p, d)) {
                    detail = "dimension " + std::to_string(d) + " mismatch on J(" +
                             std::to_string(n) + "," + std::to_string(k) + ")";
                    return false;
                }
                ++checked;
            }
        }
    }
    if (enumerate_faces(HypersimplexParams(8, 3)).of_dim(0).size() != 56) {
        detail = "J(8,3) does not have 56 vertices";
        return false;
    }
    const FaceSet oct = enumerate_faces(HypersimplexParams(4, 2));
    if (oct.of_dim(0).size() != 6 || oct.of_dim(1).size() != 12 || oct.of_dim(2).size() != 8 ||
        oct.of_dim(3).size() != 1) {
        detail = "J(4,2) f-vector is not the octahedron's";
        return false;
    }
    detail = "closed form matches enumeration for all n <= 8 (" + std::to_string(checked) +
             " positive dimensions); J(8,3) has 56 vertices; J(4,2) is the octahedron";
    return true;
}

bool criterion4(std::string& detail) {
    std::size_t tested = 0, cyclic_seen = 0;

    // the published triangle fixtures
    const HypersimplexParams p31(3, 1);
    const FaceLabel A = lab("100", 3), B = lab("010", 3), C = lab("001", 3);
    const FaceLabel AB = lab("**0", 3), AC = lab("*0*", 3), BC = lab("0**", 3);
    const FaceLabel ABC = lab("***", 3);
    const MorseMatching v1({{A, AB, std::nullopt}, {B, BC, std::nullopt}, {C, AC, std::nullopt}});
    const MorseMatching v2({{FaceLabel::empty(), A, std::nullopt},
                            {B, AB, std::nullopt},
                            {C, AC, std::nullopt},
                            {BC, ABC, std::nullopt}});
    {
        const auto witness = detect_cycle(build_hasse(p31, v1));
        const auto path = find_closed_vpath(p31, v1);
        if (!witness || !path) {
            detail = "the cyclic triangle fixture was not detected as cyclic";
            return false;
        }
        std::set<FaceLabel> cells(witness->begin(), witness->end());
        const std::set<FaceLabel> expected{A, AB, B, BC, C, AC};
        if (cells != expected) {
            detail = "wrong witness cells on the cyclic triangle fixture";
            return false;
        }
        std::set<FaceLabel> path_cells(path->cells.begin(), path->cells.end());
        if (path_cells != expected) {
            detail = "wrong closed-path cells on the cyclic triangle fixture";
            return false;
        }
        if (detect_cycle(build_hasse(p31, v2)) || find_closed_vpath(p31, v2)) {
            detail = "the acyclic triangle fixture was flagged cyclic";
            return false;
        }
        tested += 2;
        ++cyclic_seen;
    }

    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            const HypersimplexParams p(n, k);
            std::vector<MorseMatching> bases;
            if (k == 1) {
                bases.push_back(testsupport::simplex_cone_matching(p));
            } else {
                for (int m0 = 0; m0 <= n - k - 1; ++m0)
                    for (int m1 = 1; m1 <= k - 1; ++m1)
                        bases.push_back(build_matching(p, {m0, m1}));
            }
            std::vector<MorseMatching> cases = bases;
            for (int i = 0; i < 100; ++i) {
                const std::uint64_t seed = 100000u * static_cast<std::uint64_t>(n) +
                                           1000u * static_cast<std::uint64_t>(k) +
                                           static_cast<std::uint64_t>(i);
                cases.push_back(
                    testsupport::perturb_matching(p, bases[i % bases.size()], seed));
            }
            for (const MorseMatching& m : cases) {
                const bool hasse_cyclic = detect_cycle(build_hasse(p, m)).has_value();
                const bool vpath_cyclic = find_closed_vpath(p, m).has_value();
                if (hasse_cyclic != vpath_cyclic) {
                    detail = "verdicts disagree on J(" + std::to_string(n) + "," +
                             std::to_string(k) + ")";
                    return false;
                }
                ++tested;
                if (hasse_cyclic) ++cyclic_seen;
            }
        }
    }
    detail = std::to_string(tested) + " matchings agree on both routes (" +
             std::to_string(cyclic_seen) + " cyclic), n <= 5 plus the triangle fixtures";
    return true;
}

bool criterion5(std::string& detail) {
    const auto instances = family_instances(7);
    for (const auto& inst : instances) {
        const HypersimplexParams p(inst.n, inst.k);
        const MorseMatching matching = build_matching(p, {inst.m0, inst.m1});
        const MorseCensus census =
            unmatched_census(p, matching, {{FaceLabel::empty(), v0_label(p)}});
        if (!census.empty_cell_unmatched) {
            detail = "the empty cell stayed matched";
            return false;
        }
        for (const auto& [dim, count] : census.unmatched) {
            const std::size_t expected = dim == 0 ? 1 : 0;
            if (count != expected) {
                detail = "u_" + std::to_string(dim) + " = " + std::to_string(count) +
                         " on J(" + std::to_string(inst.n) + "," + std::to_string(inst.k) + ")";
                return false;
            }
        }
    }
    detail = "dropping the anchor pair leaves u_0 = 1, u_p = 0 on all " +
             std::to_string(instances.size()) + " instances";
    return true;
}

bool criterion6(std::string& detail) {
    std::size_t complexes = 0;
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            const HypersimplexParams p(n, k);

            for (const bool boundary_only : {false, true}) {
                const Subcomplex sub = boundary_only ? proper_faces(p) : full_complex(p);
                const OrderComplex oc = order_complex(p, sub);
                const ChainComplex cc = boundary_matrices(oc);
                for (std::size_t d = 1; d < cc.boundary.size(); ++d) {
                    if (!composes_to_zero(cc.boundary[d - 1], cc.boundary[d])) {
                        detail = "boundary composition nonzero on J(" + std::to_string(n) +
                                 "," + std::to_string(k) + ")";
                        return false;
                    }
                }
                ++complexes;

                const auto groups = reduced_homology(p, sub);
                for (const auto& [degree, group] : groups) {
                    long long expected_betti = 0;
                    if (boundary_only && degree == n - 2) expected_betti = 1;
                    if (group.betti != expected_betti || !group.torsion.empty()) {
                        detail = std::string(boundary_only ? "boundary" : "full") +
                                 " homology wrong in degree " + std::to_string(degree) +
                                 " on J(" + std::to_string(n) + "," + std::to_string(k) + ")";
                        return false;
                    }
                }
            }
        }
    }
    detail = "full complexes vanish and boundaries are (n-2)-spheres for all n <= 5; "
             "boundary composition zero on " +
             std::to_string(complexes) + " complexes";
    return true;
}

bool criterion7(std::string& detail) {
    const auto instances = family_instances(7);
    for (const auto& inst : instances) {
        const HypersimplexParams p(inst.n, inst.k);
        const FaceSet faces = enumerate_faces(p);
        long long chi = 0, reduced_chi = 0;
        for (int d = -1; d <= faces.top_dimension(); ++d) {
            const long long signed_count =
                (d % 2 == 0 ? 1 : -1) * static_cast<long long>(faces.of_dim(d).size());
            reduced_chi += signed_count;
            if (d >= 0) chi += signed_count;
        }
        if (chi != 1 || reduced_chi != 0) {
            detail = "Euler identity failed on J(" + std::to_string(inst.n) + "," +
                     std::to_string(inst.k) + ")";
            return false;
        }
    }
    detail = "chi = 1 and reduced chi = 0 on all " + std::to_string(instances.size()) +
             " instances";
    return true;
}

}  // namespace

int main() {
    criterion(1, "family matchings are complete and acyclic", criterion1);
    criterion(2, "worked example pairs carry the exact rule identifiers", criterion2);
    criterion(3, "face census equals the closed form", criterion3);
    criterion(4, "cycle detection and closed-path search agree", criterion4);
    criterion(5, "unanchoring leaves a single unmatched vertex", criterion5);
    criterion(6, "homology of full complexes and boundary spheres", criterion6);
    criterion(7, "Euler identities", criterion7);

    if (failures == 0)
        std::printf("all 7 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}

// Test-only helpers: independent oracles and fixture builders. Nothing in
// here may call the production code paths it is used to check, except where
// noted.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "hypermorse/face_lattice.hpp"
#include "hypermorse/matching.hpp"
#include "hypermorse/snf.hpp"

namespace hypermorse::testsupport {

// A face discovered by brute force: its vertex set and the canonical labels
// that describe it.
struct BruteFace {
    std::vector<Vertex> vertices;  // sorted
    std::vector<FaceLabel> canonical_labels;
    int dim = -2;
};

// Enumerates every word over {0,1,*} of length n and groups the valid ones
// by vertex set. Each group is one face of the polytope; its dimension is
// read off its unique canonical label.
inline std::vector<BruteFace> brute_force_faces(const HypersimplexParams& p) {
    std::map<std::vector<Vertex>, std::vector<FaceLabel>> groups;
    std::vector<Symbol> word(static_cast<std::size_t>(p.n), Symbol::zero);
    while (true) {
        const FaceLabel label{std::vector<Symbol>(word)};
        if (is_valid_label(p, label)) groups[vertices_of(p, label)].push_back(label);
        // odometer over the alphabet
        std::size_t i = 0;
        while (i < word.size()) {
            if (word[i] != Symbol::star) {
                word[i] = word[i] == Symbol::zero ? Symbol::one : Symbol::star;
                break;
            }
            word[i] = Symbol::zero;
            ++i;
        }
        if (i == word.size()) break;
    }

    std::vector<BruteFace> out;
    for (auto& [vertices, labels] : groups) {
        BruteFace f;
        f.vertices = vertices;
        for (const FaceLabel& l : labels)
            if (is_canonical(p, l)) f.canonical_labels.push_back(l);
        if (f.canonical_labels.size() == 1) f.dim = dimension(p, f.canonical_labels.front());
        out.push_back(std::move(f));
    }
    return out;
}

// Exact rank over the rationals by fraction-free Gaussian elimination.
inline std::size_t bareiss_rank(IntMatrix m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t pivot = R;
        for (std::size_t r = rank; r < R; ++r)
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == R) continue;
        for (std::size_t c = 0; c < C; ++c) std::swap(m(rank, c), m(pivot, c));
        for (std::size_t r = rank + 1; r < R; ++r) {
            for (std::size_t c = col + 1; c < C; ++c)
                m(r, c) = (m(rank, col) * m(r, c) - m(r, col) * m(rank, c)) / prev;
            m(r, col) = 0;
        }
        prev = m(rank, col);
        ++rank;
    }
    return rank;
}

// Exact determinant of a square matrix, Bareiss style.
inline BigInt bareiss_det(IntMatrix m) {
    const std::size_t N = m.rows();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = N;
            for (std::size_t r = k + 1; r < N; ++r)
                if (m(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot == N) return 0;
            for (std::size_t c = 0; c < N; ++c) std::swap(m(k, c), m(pivot, c));
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < N; ++r)
            for (std::size_t c = k + 1; c < N; ++c)
                m(r, c) = (m(k, k) * m(r, c) - m(r, k) * m(k, c)) / prev;
        prev = m(k, k);
    }
    return N == 0 ? BigInt(1) : BigInt(sign) * m(N - 1, N - 1);
}

// Complete acyclic matching on the simplex J(n,1), where faces correspond
// to nonempty position subsets: every face avoiding position 0 is paired
// with the face that adds it. Fills the k = 1 gap that the rule family
// leaves open, so the graph machinery can be exercised there too.
inline MorseMatching simplex_cone_matching(const HypersimplexParams& p) {
    if (p.k != 1) throw std::invalid_argument("simplex_cone_matching needs k = 1");
    const std::size_t n = static_cast<std::size_t>(p.n);
    auto label_of_subset = [&](const std::vector<std::size_t>& subset) {
        std::vector<Symbol> symbols(n, Symbol::zero);
        if (subset.size() == 1)
            symbols[subset.front()] = Symbol::one;
        else
            for (std::size_t i : subset) symbols[i] = Symbol::star;
        return FaceLabel(std::move(symbols));
    };

    std::vector<MorseMatching::Pair> pairs;
    // subsets of {1..n-1}, including the empty one
    for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (mask & (1ull << i)) subset.push_back(i + 1);
        std::vector<std::size_t> coned = subset;
        coned.insert(coned.begin(), 0);
        const FaceLabel upper = label_of_subset(coned);
        if (subset.empty())
            pairs.push_back({FaceLabel::empty(), upper, RuleId::v0_anchor});
        else
            pairs.push_back({label_of_subset(subset), upper, std::nullopt});
    }
    return MorseMatching(std::move(pairs));
}

// Deterministically seeded rewiring of two matched pairs at a time, applied
// where the codimension-1 relation permits. Two moves:
//   - swap the partners of two pairs in the same dimension band;
//   - splice a pair (lo, mid) with a pair (mid', up) one band higher into
//     the single pair (mid, up), leaving lo and mid' unmatched.
// Either way the result is a valid discrete vector field; it may or may not
// be acyclic.
inline MorseMatching perturb_matching(const HypersimplexParams& p, const MorseMatching& base,
                                      std::uint64_t seed, int target_moves = 10) {
    std::vector<MorseMatching::Pair> pairs = base.pairs();
    if (pairs.size() < 2) return base;
    std::mt19937_64 rng(seed);
    int done = 0;
    for (int attempt = 0; attempt < 400 && done < target_moves; ++attempt) {
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        const std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        const MorseMatching::Pair a = pairs[i];
        const MorseMatching::Pair b = pairs[j];
        const int da = dimension(p, a.upper);
        const int db = dimension(p, b.upper);
        if (rng() & 1) {
            if (a.lower.is_empty() || b.lower.is_empty()) continue;
            if (da != db) continue;
            const std::vector<FaceLabel> under_b = facets(p, b.upper);
            const std::vector<FaceLabel> under_a = facets(p, a.upper);
            if (!std::binary_search(under_b.begin(), under_b.end(), a.lower)) continue;
            if (!std::binary_search(under_a.begin(), under_a.end(), b.lower)) continue;
            std::swap(pairs[i].upper, pairs[j].upper);
            pairs[i].rule.reset();
            pairs[j].rule.reset();
            ++done;
        } else {
            if (da + 1 != db) continue;
            const std::vector<FaceLabel> under_b = facets(p, b.upper);
            if (!std::binary_search(under_b.begin(), under_b.end(), a.upper)) continue;
            pairs[i] = {a.upper, b.upper, std::nullopt};
            pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(j));
            ++done;
        }
    }
    return MorseMatching(std::move(pairs));
}

}  // namespace hypermorse::testsupport

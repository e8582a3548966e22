#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "face_lattice.hpp"
#include "snf.hpp"

namespace hypermorse {

// A set of canonical faces closed under taking facets. The empty face is
// always implicitly present and never stored.
class Subcomplex {
public:
    Subcomplex() = default;
    explicit Subcomplex(std::set<FaceLabel> faces) : faces_(std::move(faces)) {}

    const std::set<FaceLabel>& faces() const { return faces_; }
    bool empty() const { return faces_.empty(); }

    bool contains(const FaceLabel& f) const { return f.is_empty() || faces_.count(f) > 0; }

private:
    std::set<FaceLabel> faces_;
};

inline Subcomplex full_complex(const HypersimplexParams& p) {
    std::set<FaceLabel> faces;
    const FaceSet fs = enumerate_faces(p);
    for (int d = 0; d <= fs.top_dimension(); ++d)
        for (const FaceLabel& f : fs.of_dim(d)) faces.insert(f);
    return Subcomplex(std::move(faces));
}

// All proper faces: the full complex with the top cell removed. For the
// hypersimplex this is the boundary sphere.
inline Subcomplex proper_faces(const HypersimplexParams& p) {
    std::set<FaceLabel> faces;
    const FaceSet fs = enumerate_faces(p);
    for (int d = 0; d < fs.top_dimension(); ++d)
        for (const FaceLabel& f : fs.of_dim(d)) faces.insert(f);
    return Subcomplex(std::move(faces));
}

// Builds a subcomplex from arbitrary seed faces by adding every facet
// transitively. Seeds are canonicalized first; added_count reports how many
// faces the closure had to add beyond the seeds.
inline Subcomplex downward_closure(const HypersimplexParams& p,
                                   const std::vector<FaceLabel>& seeds,
                                   std::size_t* added_count = nullptr) {
    std::set<FaceLabel> faces;
    std::vector<FaceLabel> work;
    for (const FaceLabel& seed : seeds) {
        if (seed.is_empty()) continue;
        const FaceLabel c = canonicalize(p, seed);
        if (faces.insert(c).second) work.push_back(c);
    }
    const std::size_t seed_count = faces.size();
    while (!work.empty()) {
        const FaceLabel f = work.back();
        work.pop_back();
        for (const FaceLabel& g : facets(p, f)) {
            if (g.is_empty()) continue;
            if (faces.insert(g).second) work.push_back(g);
        }
    }
    if (added_count) *added_count = faces.size() - seed_count;
    return Subcomplex(std::move(faces));
}

inline bool is_downward_closed(const HypersimplexParams& p, const Subcomplex& sub) {
    for (const FaceLabel& f : sub.faces()) {
        if (!is_canonical(p, f)) return false;
        for (const FaceLabel& g : facets(p, f))
            if (!sub.contains(g)) return false;
    }
    return true;
}

// The order complex of the face poset of a subcomplex: d-simplices are the
// strictly increasing chains of d+1 faces (empty face excluded), with chain
// entries ordered by face dimension.
struct OrderComplex {
    std::vector<FaceLabel> points;  // poset elements, sorted by (dim, label)
    std::vector<std::vector<std::vector<std::int32_t>>> chains;  // [d] -> d-simplices

    int top_dimension() const { return static_cast<int>(chains.size()) - 1; }
};

inline OrderComplex order_complex(const HypersimplexParams& p, const Subcomplex& sub) {
    if (!is_downward_closed(p, sub))
        throw std::invalid_argument("order_complex: subcomplex is not downward-closed");

    OrderComplex oc;
    oc.points.assign(sub.faces().begin(), sub.faces().end());
    std::sort(oc.points.begin(), oc.points.end(),
              [&](const FaceLabel& a, const FaceLabel& b) {
                  const int da = dimension(p, a), db = dimension(p, b);
                  return da != db ? da < db : a < b;
              });
    const std::size_t N = oc.points.size();
    if (N == 0) return oc;

    std::vector<std::vector<std::int32_t>> above(N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (i != j && face_leq(oc.points[i], oc.points[j]))
                above[i].push_back(static_cast<std::int32_t>(j));

    // depth-first chain extension; chains come out in lexicographic order
    std::vector<std::int32_t> chain;
    auto emit = [&]() {
        const std::size_t d = chain.size() - 1;
        if (oc.chains.size() <= d) oc.chains.resize(d + 1);
        oc.chains[d].push_back(chain);
    };
    auto extend = [&](auto&& self, std::int32_t last) -> void {
        for (std::int32_t j : above[static_cast<std::size_t>(last)]) {
            chain.push_back(j);
            emit();
            self(self, j);
            chain.pop_back();
        }
    };
    for (std::size_t i = 0; i < N; ++i) {
        chain.push_back(static_cast<std::int32_t>(i));
        emit();
        extend(extend, static_cast<std::int32_t>(i));
        chain.pop_back();
    }
    return oc;
}

// The augmented simplicial chain complex of an order complex. boundary[0]
// is the augmentation row onto the empty simplex; boundary[i] for i >= 1
// carries the alternating-sign simplicial boundary on the ordered chains.
struct ChainComplex {
    std::vector<IntMatrix> boundary;     // index i holds the map out of degree i
    std::vector<std::size_t> cell_count;  // simplices per degree 0..top
};

inline ChainComplex boundary_matrices(const OrderComplex& oc) {
    ChainComplex cc;
    const int top = oc.top_dimension();
    if (top < 0) return cc;

    cc.cell_count.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d)
        cc.cell_count[static_cast<std::size_t>(d)] = oc.chains[static_cast<std::size_t>(d)].size();

    cc.boundary.resize(static_cast<std::size_t>(top) + 1);
    cc.boundary[0] = IntMatrix(1, cc.cell_count[0]);
    for (std::size_t j = 0; j < cc.cell_count[0]; ++j) cc.boundary[0](0, j) = 1;

    for (int d = 1; d <= top; ++d) {
        const auto& lower = oc.chains[static_cast<std::size_t>(d - 1)];
        const auto& current = oc.chains[static_cast<std::size_t>(d)];
        IntMatrix b(lower.size(), current.size());
        std::vector<std::int32_t> sub;
        for (std::size_t j = 0; j < current.size(); ++j) {
            const auto& chain = current[j];
            for (std::size_t v = 0; v < chain.size(); ++v) {
                sub.clear();
                for (std::size_t w = 0; w < chain.size(); ++w)
                    if (w != v) sub.push_back(chain[w]);
                const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
                if (it == lower.end() || *it != sub)
                    throw std::logic_error("boundary chain missing from the order complex");
                const std::size_t row = static_cast<std::size_t>(it - lower.begin());
                b(row, j) = (v % 2 == 0) ? 1 : -1;
            }
        }
        cc.boundary[static_cast<std::size_t>(d)] = std::move(b);
    }
    return cc;
}

struct HomologyGroup {
    long long betti = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next

    bool is_zero() const { return betti == 0 && torsion.empty(); }
};

// Reduced integer homology of the subcomplex, computed on its order complex
// via Smith normal form of the augmented boundary maps. Degrees run from -1
// to the top dimension; the empty subcomplex has a single Z in degree -1.
inline std::map<int, HomologyGroup> reduced_homology(const HypersimplexParams& p,
                                                     const Subcomplex& sub) {
    const OrderComplex oc = order_complex(p, sub);
    const ChainComplex cc = boundary_matrices(oc);
    const int top = oc.top_dimension();

    std::vector<SmithResult> snf(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d)
        snf[static_cast<std::size_t>(d)] = smith_normal_form(cc.boundary[static_cast<std::size_t>(d)]);

    auto rank_of = [&](int d) -> long long {
        if (d < 0 || d > top) return 0;
        return static_cast<long long>(snf[static_cast<std::size_t>(d)].rank);
    };
    auto torsion_of = [&](int d) -> std::vector<BigInt> {
        if (d < 0 || d > top) return {};
        std::vector<BigInt> out;
        for (const BigInt& f : snf[static_cast<std::size_t>(d)].invariant_factors)
            if (f > 1) out.push_back(f);
        return out;
    };

    std::map<int, HomologyGroup> groups;
    groups[-1] = {1 - rank_of(0), torsion_of(0)};
    for (int d = 0; d <= top; ++d) {
        HomologyGroup g;
        g.betti = static_cast<long long>(cc.cell_count[static_cast<std::size_t>(d)]) -
                  rank_of(d) - rank_of(d + 1);
        g.torsion = torsion_of(d + 1);
        groups[d] = std::move(g);
    }
    return groups;
}

// Alternating sum of face counts per dimension, empty face excluded.
inline long long euler_characteristic(const HypersimplexParams& p, const Subcomplex& sub) {
    long long chi = 0;
    for (const FaceLabel& f : sub.faces()) chi += dimension(p, f) % 2 == 0 ? 1 : -1;
    return chi;
}

}  // namespace hypermorse

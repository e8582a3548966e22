#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypermorse {

// Parameters (n, k) of the hypersimplex J(n,k): the convex hull of all 0/1
// vectors of length n whose coordinates sum to k.
struct HypersimplexParams {
    int n = 0;
    int k = 0;

    HypersimplexParams(int n_, int k_) : n(n_), k(k_) {
        if (n < 2 || k < 1 || k > n - 1)
            throw std::invalid_argument("hypersimplex requires 1 <= k <= n-1 (got n=" +
                                        std::to_string(n_) + ", k=" + std::to_string(k_) +
                                        ")");
    }
};

// Word alphabet for face descriptors. The enumerator order fixes the
// lexicographic order used everywhere: '0' < '1' < '*'.
enum class Symbol : std::uint8_t { zero = 0, one = 1, star = 2 };

inline char to_char(Symbol s) {
    switch (s) {
    case Symbol::zero: return '0';
    case Symbol::one: return '1';
    case Symbol::star: return '*';
    }
    return '?';
}

inline Symbol symbol_from_char(char c) {
    switch (c) {
    case '0': return Symbol::zero;
    case '1': return Symbol::one;
    case '*': return Symbol::star;
    default:
        throw std::invalid_argument(std::string("illegal label character '") + c +
                                    "' (expected 0, 1 or *)");
    }
}

// A face descriptor: a word of length n over {0,1,*}, or the distinguished
// empty face of dimension -1. The empty face is encoded as the word of
// length zero; every parameter set has n >= 2, so the encoding is
// unambiguous.
class FaceLabel {
public:
    FaceLabel() = default;  // the empty face

    explicit FaceLabel(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    static FaceLabel empty() { return FaceLabel{}; }

    bool is_empty() const { return symbols_.empty(); }
    std::size_t size() const { return symbols_.size(); }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    Symbol at(std::size_t i) const { return symbols_.at(i); }

    std::size_t count(Symbol s) const {
        return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), s));
    }

    FaceLabel with(std::size_t i, Symbol s) const {
        FaceLabel out = *this;
        out.symbols_.at(i) = s;
        return out;
    }

    auto operator<=>(const FaceLabel&) const = default;

private:
    std::vector<Symbol> symbols_;
};

// Human-readable text form; the empty face prints as U+2205.
inline std::string to_text(const FaceLabel& label) {
    if (label.is_empty()) return "∅";
    std::string out;
    out.reserve(label.size());
    for (Symbol s : label.symbols()) out.push_back(to_char(s));
    return out;
}

// Machine-readable text form; the empty face spells "empty".
inline std::string to_machine_text(const FaceLabel& label) {
    if (label.is_empty()) return "empty";
    return to_text(label);
}

// Parses a label of length n, or one of the empty-face tokens. Does not
// canonicalize.
inline FaceLabel parse_label(std::string_view text, int n) {
    if (text == "empty" || text == "∅") return FaceLabel::empty();
    if (static_cast<int>(text.size()) != n)
        throw std::invalid_argument("label \"" + std::string(text) + "\" has length " +
                                    std::to_string(text.size()) + ", expected " +
                                    std::to_string(n));
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) symbols.push_back(symbol_from_char(c));
    return FaceLabel(std::move(symbols));
}

inline std::size_t count_zeros(const FaceLabel& label) {
    if (label.is_empty()) throw std::invalid_argument("count_zeros: empty face has no symbols");
    return label.count(Symbol::zero);
}

inline std::size_t count_ones(const FaceLabel& label) {
    if (label.is_empty()) throw std::invalid_argument("count_ones: empty face has no symbols");
    return label.count(Symbol::one);
}

inline std::size_t count_stars(const FaceLabel& label) {
    if (label.is_empty()) throw std::invalid_argument("count_stars: empty face has no symbols");
    return label.count(Symbol::star);
}

// A label is valid for (n,k) when it describes a nonempty vertex set:
// it has exactly n symbols and count_ones <= k <= count_ones + count_stars.
inline bool is_valid_label(const HypersimplexParams& p, const FaceLabel& label) {
    if (label.is_empty()) return true;
    if (static_cast<int>(label.size()) != p.n) return false;
    const int s1 = static_cast<int>(label.count(Symbol::one));
    const int t = static_cast<int>(label.count(Symbol::star));
    return s1 <= p.k && p.k <= s1 + t;
}

inline void validate_label(const HypersimplexParams& p, const FaceLabel& label) {
    if (!is_valid_label(p, label))
        throw std::invalid_argument("label " + to_text(label) + " is not a face of J(" +
                                    std::to_string(p.n) + "," + std::to_string(p.k) + ")");
}

// Dimension of the face described by a label. The empty face has dimension
// -1; a label whose stars are all forced describes a vertex.
inline int dimension(const HypersimplexParams& p, const FaceLabel& label) {
    if (label.is_empty()) return -1;
    validate_label(p, label);
    const int s1 = static_cast<int>(label.count(Symbol::one));
    const int t = static_cast<int>(label.count(Symbol::star));
    const int free_ones = p.k - s1;
    if (t == 0) return 0;
    if (free_ones == 0 || free_ones == t) return 0;  // degenerate: stars are forced
    return t - 1;
}

// Resolves forced stars, producing the unique canonical representative.
// Vertices come out star-free; faces of dimension d keep exactly d+1 stars.
// Idempotent.
inline FaceLabel canonicalize(const HypersimplexParams& p, const FaceLabel& label) {
    if (label.is_empty()) return label;
    validate_label(p, label);
    const int s1 = static_cast<int>(label.count(Symbol::one));
    const int t = static_cast<int>(label.count(Symbol::star));
    const int free_ones = p.k - s1;
    if (t == 0 || (free_ones != 0 && free_ones != t)) return label;
    const Symbol forced = free_ones == 0 ? Symbol::zero : Symbol::one;
    std::vector<Symbol> symbols = label.symbols();
    for (Symbol& s : symbols)
        if (s == Symbol::star) s = forced;
    return FaceLabel(std::move(symbols));
}

inline bool is_canonical(const HypersimplexParams& p, const FaceLabel& label) {
    if (label.is_empty()) return true;
    if (!is_valid_label(p, label)) return false;
    const int s1 = static_cast<int>(label.count(Symbol::one));
    const int t = static_cast<int>(label.count(Symbol::star));
    if (t == 0) return s1 == p.k;
    return t >= 2 && 1 <= p.k - s1 && p.k - s1 <= t - 1;
}

// A vertex of J(n,k): a 0/1 vector of length n with coordinate sum k.
struct Vertex {
    std::vector<std::uint8_t> coords;
    auto operator<=>(const Vertex&) const = default;
};

inline FaceLabel label_of(const Vertex& v) {
    std::vector<Symbol> symbols;
    symbols.reserve(v.coords.size());
    for (std::uint8_t c : v.coords) symbols.push_back(c ? Symbol::one : Symbol::zero);
    return FaceLabel(std::move(symbols));
}

// The distinguished vertex (1,...,1,0,...,0) with k leading ones.
inline Vertex v0_vertex(const HypersimplexParams& p) {
    Vertex v;
    v.coords.assign(static_cast<std::size_t>(p.n), 0);
    for (int i = 0; i < p.k; ++i) v.coords[static_cast<std::size_t>(i)] = 1;
    return v;
}

inline FaceLabel v0_label(const HypersimplexParams& p) { return label_of(v0_vertex(p)); }

// All vertices of the face: 0/1 completions of the stars with total sum k.
inline std::vector<Vertex> vertices_of(const HypersimplexParams& p, const FaceLabel& label) {
    if (label.is_empty())
        throw std::invalid_argument("vertices_of: the empty face has no vertices");
    validate_label(p, label);
    std::vector<std::size_t> star_positions;
    for (std::size_t i = 0; i < label.size(); ++i)
        if (label.at(i) == Symbol::star) star_positions.push_back(i);
    const int free_ones = p.k - static_cast<int>(label.count(Symbol::one));

    Vertex base;
    base.coords.assign(label.size(), 0);
    for (std::size_t i = 0; i < label.size(); ++i)
        if (label.at(i) == Symbol::one) base.coords[i] = 1;

    std::vector<Vertex> out;
    const std::size_t t = star_positions.size();
    const std::size_t r = static_cast<std::size_t>(free_ones);
    // choose which stars become 1
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        Vertex v = base;
        for (std::size_t i : pick) v.coords[star_positions[i]] = 1;
        out.push_back(std::move(v));
        if (r == 0) break;
        std::size_t i = r;
        while (i > 0 && pick[i - 1] == t - r + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Face order oracle: lower <= upper iff every vertex of lower is a vertex of
// upper. The empty face is a face of everything. Exponential in the star
// count; kept as the independent check for the structural routines below.
inline bool is_face_of(const HypersimplexParams& p, const FaceLabel& lower,
                       const FaceLabel& upper) {
    if (lower.is_empty()) return true;
    if (upper.is_empty()) return false;
    validate_label(p, lower);
    validate_label(p, upper);
    const std::vector<Vertex> lo = vertices_of(p, lower);
    const std::vector<Vertex> hi = vertices_of(p, upper);
    return std::includes(hi.begin(), hi.end(), lo.begin(), lo.end());
}

// Symbolwise face order for canonical labels: agrees with is_face_of but
// runs in O(n). lower <= upper iff lower matches upper at every position
// where upper is not a star.
inline bool face_leq(const FaceLabel& lower, const FaceLabel& upper) {
    if (lower.is_empty()) return true;
    if (upper.is_empty()) return false;
    if (lower.size() != upper.size()) return false;
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (upper.at(i) != Symbol::star && lower.at(i) != upper.at(i)) return false;
    return true;
}

inline unsigned long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    unsigned long long out = 1;
    for (int i = 1; i <= r; ++i) {
        out = out * static_cast<unsigned long long>(n - r + i);
        out /= static_cast<unsigned long long>(i);
    }
    return out;
}

// Closed-form count of i-faces for i >= 1: sum of C(n,i+1) * C(n-i-1, j-1)
// over all j with 1 <= j <= k <= j+i-1 <= n-1.
inline unsigned long long face_count_formula(const HypersimplexParams& p, int i) {
    if (i < 1 || i > p.n - 1)
        throw std::invalid_argument("face_count_formula: dimension " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(p.n - 1));
    unsigned long long total = 0;
    const int j_lo = std::max(1, p.k - i + 1);
    const int j_hi = std::min(p.k, p.n - i);
    for (int j = j_lo; j <= j_hi; ++j)
        total += binomial(p.n, i + 1) * binomial(p.n - i - 1, j - 1);
    return total;
}

// All faces of J(n,k) grouped by dimension, from -1 (the empty face) up to
// n-1 (the all-star label). Within each dimension the labels are sorted
// lexicographically with '0' < '1' < '*'.
class FaceSet {
public:
    explicit FaceSet(int top_dim) : top_dim_(top_dim), by_dim_(static_cast<std::size_t>(top_dim + 2)) {}

    int top_dimension() const { return top_dim_; }

    const std::vector<FaceLabel>& of_dim(int d) const {
        return by_dim_.at(static_cast<std::size_t>(d + 1));
    }

    std::size_t total_cells() const {
        std::size_t total = 0;
        for (const auto& v : by_dim_) total += v.size();
        return total;
    }

    void add(int d, FaceLabel label) {
        by_dim_.at(static_cast<std::size_t>(d + 1)).push_back(std::move(label));
    }

    void sort_all() {
        for (auto& v : by_dim_) std::sort(v.begin(), v.end());
    }

private:
    int top_dim_;
    std::vector<std::vector<FaceLabel>> by_dim_;
};

namespace detail {

// Calls fn on every r-subset of {0..n-1}, ascending.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t r, Fn&& fn) {
    if (r > n) return;
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(pick));
        if (r == 0) break;
        std::size_t i = r;
        while (i > 0 && pick[i - 1] == n - r + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace detail

inline FaceSet enumerate_faces(const HypersimplexParams& p) {
    FaceSet faces(p.n - 1);
    faces.add(-1, FaceLabel::empty());

    const std::size_t n = static_cast<std::size_t>(p.n);

    // vertices: one labels at each k-subset of positions
    detail::for_each_subset(n, static_cast<std::size_t>(p.k), [&](const std::vector<std::size_t>& ones) {
        std::vector<Symbol> symbols(n, Symbol::zero);
        for (std::size_t i : ones) symbols[i] = Symbol::one;
        faces.add(0, FaceLabel(std::move(symbols)));
    });

    // dimension t-1 faces: t >= 2 stars, s1 ones with 1 <= k - s1 <= t - 1
    for (int t = 2; t <= p.n; ++t) {
        const int s1_lo = std::max(0, p.k - t + 1);
        const int s1_hi = std::min(p.k - 1, p.n - t);
        for (int s1 = s1_lo; s1 <= s1_hi; ++s1) {
            detail::for_each_subset(n, static_cast<std::size_t>(t), [&](const std::vector<std::size_t>& stars) {
                std::vector<std::size_t> rest;
                rest.reserve(n - static_cast<std::size_t>(t));
                std::size_t si = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (si < stars.size() && stars[si] == i)
                        ++si;
                    else
                        rest.push_back(i);
                }
                detail::for_each_subset(rest.size(), static_cast<std::size_t>(s1),
                                        [&](const std::vector<std::size_t>& ones) {
                                            std::vector<Symbol> symbols(n, Symbol::zero);
                                            for (std::size_t i : stars) symbols[i] = Symbol::star;
                                            for (std::size_t i : ones) symbols[rest[i]] = Symbol::one;
                                            faces.add(t - 1, FaceLabel(std::move(symbols)));
                                        });
            });
        }
    }

    faces.sort_all();
    return faces;
}

// Codimension-1 faces. Substitutes each star by 0 and by 1, canonicalizes,
// and keeps the results of dimension exactly dim-1. Vertices cover only the
// empty face; the empty face covers nothing.
inline std::vector<FaceLabel> facets(const HypersimplexParams& p, const FaceLabel& face) {
    if (face.is_empty()) return {};
    if (!is_canonical(p, face))
        throw std::invalid_argument("facets: label " + to_text(face) + " is not canonical");
    const int d = dimension(p, face);
    if (d == 0) return {FaceLabel::empty()};

    std::vector<FaceLabel> out;
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (face.at(i) != Symbol::star) continue;
        for (Symbol s : {Symbol::zero, Symbol::one}) {
            FaceLabel candidate = canonicalize(p, face.with(i, s));
            if (dimension(p, candidate) == d - 1) out.push_back(std::move(candidate));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hypermorse

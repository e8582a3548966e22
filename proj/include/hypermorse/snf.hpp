#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace hypermorse {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries. Sized for
// desk-scale chain complexes; rows are contiguous.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> a_;
};

struct SmithResult {
    std::size_t rank = 0;
    std::vector<BigInt> invariant_factors;  // positive, d1 | d2 | ... | d_rank
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace detail

// Diagonalizes by unimodular row/column operations, then massages the
// diagonal into the divisibility chain. Exact arbitrary-precision
// arithmetic throughout; pivots are chosen with smallest nonzero absolute
// value to limit coefficient growth.
inline SmithResult smith_normal_form(IntMatrix m) {
    using boost::multiprecision::abs;
    using boost::multiprecision::gcd;

    const std::size_t R = m.rows();
    const std::size_t C = m.cols();
    std::size_t t = 0;
    while (t < R && t < C) {
        // pivot: smallest |value| in the active submatrix, settling for the
        // first unit found
        std::size_t pr = R, pc = C;
        bool have = false;
        for (std::size_t r = t; r < R && !(have && abs(m(pr, pc)) == 1); ++r) {
            for (std::size_t c = t; c < C; ++c) {
                const BigInt& v = m(r, c);
                if (v == 0) continue;
                if (!have || abs(v) < abs(m(pr, pc))) {
                    pr = r;
                    pc = c;
                    have = true;
                    if (abs(v) == 1) break;
                }
            }
        }
        if (!have) break;  // active submatrix is zero
        detail::swap_rows(m, t, pr);
        detail::swap_cols(m, t, pc);

        for (;;) {
            // clear the pivot column with row operations
            for (std::size_t r = t + 1; r < R; ++r) {
                if (m(r, t) == 0) continue;
                const BigInt q = m(r, t) / m(t, t);
                if (q != 0)
                    for (std::size_t c = t; c < C; ++c) m(r, c) -= q * m(t, c);
            }
            std::size_t best_r = R;
            for (std::size_t r = t + 1; r < R; ++r)
                if (m(r, t) != 0 && (best_r == R || abs(m(r, t)) < abs(m(best_r, t))))
                    best_r = r;
            if (best_r != R) {
                // leftover remainder becomes the new, strictly smaller pivot
                detail::swap_rows(m, t, best_r);
                continue;
            }

            // clear the pivot row with column operations
            for (std::size_t c = t + 1; c < C; ++c) {
                if (m(t, c) == 0) continue;
                const BigInt q = m(t, c) / m(t, t);
                if (q != 0)
                    for (std::size_t r = t; r < R; ++r) m(r, c) -= q * m(r, t);
            }
            std::size_t best_c = C;
            for (std::size_t c = t + 1; c < C; ++c)
                if (m(t, c) != 0 && (best_c == C || abs(m(t, c)) < abs(m(t, best_c))))
                    best_c = c;
            if (best_c != C) {
                detail::swap_cols(m, t, best_c);
                continue;
            }
            break;
        }
        ++t;
    }

    std::vector<BigInt> d;
    d.reserve(t);
    for (std::size_t i = 0; i < t; ++i) d.push_back(abs(m(i, i)));

    // pairwise gcd/lcm passes turn an equivalent diagonal into the
    // invariant-factor chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] == 0) continue;
                const BigInt g = gcd(d[i], d[j]);
                d[j] = (d[i] / g) * d[j];
                d[i] = g;
                changed = true;
            }
        }
    }
    return {t, std::move(d)};
}

// Checks a * b == 0 using column-sparse accumulation, cheap for boundary
// matrices whose columns have few nonzeros.
inline bool composes_to_zero(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("composes_to_zero: inner dimensions differ");
    // sparse columns of a
    std::vector<std::vector<std::pair<std::size_t, const BigInt*>>> acols(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != 0) acols[c].emplace_back(r, &a(r, c));

    std::vector<BigInt> acc(a.rows());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<std::size_t> touched;
        for (std::size_t r = 0; r < b.rows(); ++r) {
            const BigInt& v = b(r, j);
            if (v == 0) continue;
            for (const auto& [i, av] : acols[r]) {
                if (acc[i] == 0) touched.push_back(i);
                acc[i] += *av * v;
            }
        }
        bool zero = true;
        for (std::size_t i : touched) {
            if (acc[i] != 0) zero = false;
            acc[i] = 0;
        }
        if (!zero) return false;
    }
    return true;
}

// Sparse triplet text (row, col, value per line) for external verification.
inline void write_triplets(const IntMatrix& m, std::ostream& os) {
    os << m.rows() << " " << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) os << r << " " << c << " " << m(r, c) << "\n";
}

}  // namespace hypermorse

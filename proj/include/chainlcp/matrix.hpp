#pragma once

// Matrices over one level of a chain-ring pair, and the three workhorse
// operations on them:
//
//   row_reduce_standard  deterministic staircase form: pivots p^v in distinct
//                        columns, valuations nondecreasing down the rows,
//                        pivot columns cleared (entries in other rows reduced
//                        mod p^v, hence zero wherever their valuation allows)
//   is_nonsingular       invertibility, decided over the residue field F_p
//   right_kernel         generators of { x : M x^T = 0 }, built from the
//                        staircase by back-substitution and gated by the
//                        orthogonality and cardinality postconditions
//
// The staircase keeps columns in their original positions; the accompanying
// permutation records where each column would sit in the fully grouped
// (pivot-blocks-first) layout, so staircase * U reads off as the returned
// matrix itself.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace chainlcp {

struct RingMatrix {
    ChainRingSpec spec;
    Level level = Level::R;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<uint64_t> entries;  // row-major canonical residues

    RingMatrix(ChainRingSpec sp, Level l, std::size_t r, std::size_t c)
        : spec(std::move(sp)), level(l), rows(r), cols(c), entries(r * c, 0) {}

    static RingMatrix from_rows(const ChainRingSpec& sp, Level l,
                                const std::vector<std::vector<long long>>& data,
                                std::size_t cols_hint = 0) {
        std::size_t c = data.empty() ? cols_hint : data.front().size();
        RingMatrix m(sp, l, data.size(), c);
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (data[i].size() != c) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = m.ring().reduce(data[i][j]);
        }
        return m;
    }

    static RingMatrix identity(const ChainRingSpec& sp, Level l, std::size_t n) {
        RingMatrix m(sp, l, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    const ChainRing& ring() const { return spec.ring(level); }

    uint64_t& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    uint64_t at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    bool operator==(const RingMatrix& o) const {
        return spec == o.spec && level == o.level && rows == o.rows && cols == o.cols &&
               entries == o.entries;
    }

    // row_i <- row_i - q * row_k
    void row_axpy_sub(std::size_t i, uint64_t q, std::size_t k) {
        const ChainRing& rg = ring();
        for (std::size_t j = 0; j < cols; ++j)
            at(i, j) = rg.sub(at(i, j), rg.mul(q, at(k, j)));
    }

    void row_scale(std::size_t i, uint64_t u) {
        const ChainRing& rg = ring();
        for (std::size_t j = 0; j < cols; ++j) at(i, j) = rg.mul(at(i, j), u);
    }
};

struct Pivot {
    std::size_t row = 0;  // row index in the reduced matrix
    std::size_t col = 0;  // column index in the original layout
    unsigned val = 0;     // pivot entry is exactly p^val
};

struct StandardForm {
    RingMatrix matrix;                  // same row span as the input
    std::vector<std::size_t> permutation;  // perm[grouped_pos] = original column
    std::vector<Pivot> pivots;          // pivots[i].row == i; valuations nondecreasing
    std::vector<unsigned> type_ks;      // k_t = #pivots of valuation t, t = 0..m-1
    std::optional<std::pair<std::size_t, std::size_t>> block_split;  // (alpha, beta)
};

// log_p of the row span's cardinality, from the pivot valuations.
inline unsigned dimension_from_type(const std::vector<unsigned>& ks, unsigned m) {
    unsigned d = 0;
    for (unsigned t = 0; t < ks.size(); ++t) d += (m - t) * ks[t];
    return d;
}

namespace detail {

inline uint64_t theta_pow(const ChainRing& rg, unsigned v) {
    uint64_t w = 1;
    for (unsigned i = 0; i < v; ++i) w *= rg.p;
    return w;
}

} // namespace detail

// Deterministic staircase reduction.  Valuations are processed in increasing
// order; at each step the topmost remaining row of the current valuation is
// pivoted on its leftmost eligible column, normalized to p^v, and its column
// is cleared from every other row (entries reduced mod p^v).
//
// With block_split = (alpha, beta) the input must satisfy the mixed-image
// shape (every entry of the last beta columns has valuation >= s-r); pivots
// of valuation below s-r then land in the first alpha columns by necessity,
// and pivots of valuation >= s-r are steered into the last beta columns
// whenever the row has an entry of that valuation there.
inline StandardForm row_reduce_standard(
    const RingMatrix& input,
    std::optional<std::pair<std::size_t, std::size_t>> block_split = std::nullopt) {
    const ChainRing& rg = input.ring();
    RingMatrix work = input;
    std::size_t n = work.cols;

    std::size_t alpha = 0;
    unsigned chi_val = 0;  // s - r: minimum valuation of the quotient-image block
    if (block_split) {
        alpha = block_split->first;
        if (alpha + block_split->second != n)
            throw std::invalid_argument("block split does not cover the columns");
        chi_val = input.spec.s() - input.spec.r();
        for (std::size_t i = 0; i < work.rows; ++i)
            for (std::size_t j = alpha; j < n; ++j)
                if (rg.valuation(work.at(i, j)) < chi_val)
                    throw std::invalid_argument("row not in R^alpha x theta^(s-r) R^beta");
    }

    auto row_min_val = [&](std::size_t i) {
        unsigned best = rg.m;
        for (std::size_t j = 0; j < n; ++j) {
            unsigned v = rg.valuation(work.at(i, j));
            if (v < best) best = v;
        }
        return best;
    };

    std::vector<bool> processed(work.rows, false);
    std::vector<Pivot> pivots;  // col/val; row indices assigned after sorting

    for (unsigned v = 0; v < rg.m; ++v) {
        for (;;) {
            // Topmost unprocessed row whose minimal valuation is exactly v.
            std::size_t row = work.rows;
            for (std::size_t i = 0; i < work.rows; ++i) {
                if (!processed[i] && row_min_val(i) == v) {
                    row = i;
                    break;
                }
            }
            if (row == work.rows) break;

            // Leftmost eligible column: quotient-image block first for
            // valuations >= s-r, falling back to the R block when the row
            // has no entry of valuation v there.
            std::size_t col = n;
            if (block_split && v >= chi_val) {
                for (std::size_t j = alpha; j < n; ++j)
                    if (rg.valuation(work.at(row, j)) == v) {
                        col = j;
                        break;
                    }
            }
            if (col == n) {
                for (std::size_t j = 0; j < n; ++j)
                    if (rg.valuation(work.at(row, j)) == v) {
                        col = j;
                        break;
                    }
            }

            uint64_t pv = detail::theta_pow(rg, v);
            work.row_scale(row, rg.unit_inverse(work.at(row, col) / pv));
            for (std::size_t i = 0; i < work.rows; ++i) {
                if (i == row) continue;
                uint64_t q = work.at(i, col) / pv;  // canonical-representative quotient
                if (q != 0) work.row_axpy_sub(i, q, row);
            }
            processed[row] = true;
            pivots.push_back({row, col, v});
        }
    }

    // Present rows grouped by valuation, then by pivot column.
    std::sort(pivots.begin(), pivots.end(), [](const Pivot& a, const Pivot& b) {
        return a.val != b.val ? a.val < b.val : a.col < b.col;
    });
    RingMatrix reduced(input.spec, input.level, pivots.size(), n);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) reduced.at(i, j) = work.at(pivots[i].row, j);
        pivots[i].row = i;
    }

    std::vector<unsigned> ks(rg.m, 0);
    std::vector<bool> is_pivot_col(n, false);
    for (const Pivot& p : pivots) {
        ++ks[p.val];
        is_pivot_col[p.col] = true;
    }

    // Column grouping: pivot columns by (valuation, column), then free
    // columns; with a block split the grouping is done per block, so the
    // permutation maps R columns to R columns and quotient columns likewise.
    std::vector<std::size_t> perm;
    perm.reserve(n);
    auto emit_block = [&](std::size_t lo, std::size_t hi) {
        for (const Pivot& p : pivots)
            if (p.col >= lo && p.col < hi) perm.push_back(p.col);
        for (std::size_t j = lo; j < hi; ++j)
            if (!is_pivot_col[j]) perm.push_back(j);
    };
    if (block_split) {
        emit_block(0, alpha);
        emit_block(alpha, n);
    } else {
        emit_block(0, n);
    }

    return StandardForm{std::move(reduced), std::move(perm), std::move(pivots),
                        std::move(ks), block_split};
}

// Remainder of w after greedy reduction against the staircase rows; zero
// exactly when w lies in the row span.
inline std::vector<uint64_t> reduce_against(const StandardForm& sf,
                                            std::vector<uint64_t> w) {
    const ChainRing& rg = sf.matrix.ring();
    if (w.size() != sf.matrix.cols) throw std::invalid_argument("length mismatch");
    for (const Pivot& p : sf.pivots) {
        uint64_t pv = detail::theta_pow(rg, p.val);
        uint64_t q = w[p.col] / pv;
        if (q == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            w[j] = rg.sub(w[j], rg.mul(q, sf.matrix.at(p.row, j)));
    }
    return w;
}

inline bool in_row_span(const StandardForm& sf, const std::vector<uint64_t>& w) {
    for (uint64_t x : reduce_against(sf, w))
        if (x != 0) return false;
    return true;
}

// Invertibility over Z_{p^m} is equivalent to invertibility of the mod-p
// reduction, decided by Gaussian elimination over F_p.
inline bool is_nonsingular(const RingMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("nonsingularity requires a square matrix");
    const uint64_t p = m.ring().p;
    std::size_t n = m.rows;
    std::vector<uint64_t> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = m.entries[i] % p;

    ChainRing fp(p, 1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (a[i * n + c] != 0) {
                piv = i;
                break;
            }
        if (piv == n) return false;
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
        uint64_t inv = fp.unit_inverse(a[c * n + c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            uint64_t f = fp.mul(a[i * n + c], inv);
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j)
                a[i * n + j] = fp.sub(a[i * n + j], fp.mul(f, a[c * n + j]));
        }
    }
    return true;
}

// Generators of the right kernel { x : M x^T = 0 }, one per free column
// (unit leading entry) plus one per pivot of positive valuation (leading
// entry p^(m-v)).  Both families are completed by back-substitution through
// the staircase, which is upper triangular on pivot columns ordered by
// valuation.  The construction is verified on the spot: every generator is
// orthogonal to every input row, and the span sizes satisfy
// |rowspan(M)| * |rowspan(K)| = p^(m * cols).
inline RingMatrix right_kernel(const RingMatrix& m) {
    const ChainRing& rg = m.ring();
    StandardForm sf = row_reduce_standard(m);
    const std::size_t n = m.cols;
    const std::size_t np = sf.pivots.size();

    auto dot_row = [&](std::size_t i, const std::vector<uint64_t>& x) {
        uint64_t acc = 0;
        for (std::size_t j = 0; j < n; ++j)
            acc = rg.add(acc, rg.mul(sf.matrix.at(i, j), x[j]));
        return acc;
    };
    // Solve p^(v_i) * x[c_i] = -(row_i . x) for pivots i = hi-1 .. 0, using
    // that row i has zeros at pivot columns of lower valuation.
    auto back_substitute = [&](std::vector<uint64_t>& x, std::size_t hi) {
        for (std::size_t ii = hi; ii-- > 0;) {
            const Pivot& p = sf.pivots[ii];
            uint64_t rhs = rg.neg(dot_row(ii, x));
            uint64_t pv = detail::theta_pow(rg, p.val);
            if (rhs % pv != 0)
                throw std::logic_error("kernel back-substitution out of step");
            x[p.col] = rhs / pv;
        }
    };

    std::vector<std::vector<uint64_t>> gens;
    std::vector<bool> is_pivot_col(n, false);
    for (const Pivot& p : sf.pivots) is_pivot_col[p.col] = true;

    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot_col[f]) continue;
        std::vector<uint64_t> x(n, 0);
        x[f] = 1;
        back_substitute(x, np);
        gens.push_back(std::move(x));
    }
    for (std::size_t i = 0; i < np; ++i) {
        if (sf.pivots[i].val == 0) continue;
        std::vector<uint64_t> x(n, 0);
        x[sf.pivots[i].col] = detail::theta_pow(rg, rg.m - sf.pivots[i].val);
        back_substitute(x, i);  // corrections live on lower-valuation pivots only
        gens.push_back(std::move(x));
    }

    RingMatrix kernel(m.spec, m.level, gens.size(), n);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) kernel.at(i, j) = gens[i][j];

    // Postcondition gates: orthogonality and the duality cardinality identity.
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t k = 0; k < kernel.rows; ++k) {
            uint64_t acc = 0;
            for (std::size_t j = 0; j < n; ++j)
                acc = rg.add(acc, rg.mul(m.at(i, j), kernel.at(k, j)));
            if (acc != 0) throw std::logic_error("kernel postcondition failed: orthogonality");
        }
    StandardForm ksf = row_reduce_standard(kernel);
    if (dimension_from_type(sf.type_ks, rg.m) + dimension_from_type(ksf.type_ks, rg.m) !=
        rg.m * n)
        throw std::logic_error("kernel postcondition failed: cardinality");

    return kernel;
}

} // namespace chainlcp

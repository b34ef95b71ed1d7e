#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

// Small dense linear algebra over GF(2). Rows are uint32_t bit masks,
// so at most 32 columns; enough for m <= 16 ambient dimensions and the
// C(8,2) = 28 quadratic-form coordinates used by the sieve.

namespace bnt::gf2 {

// Row-reduce in place; returns rank. Pivot of a row is its lowest set bit.
// Rows end up sorted by pivot with zero rows removed.
inline int rref(std::vector<uint32_t>& rows, std::vector<int>* pivots = nullptr) {
    std::vector<uint32_t> out;
    std::vector<int> piv;
    for (uint32_t v : rows) {
        for (size_t k = 0; k < out.size(); ++k)
            if (v & (uint32_t{1} << piv[k])) v ^= out[k];
        if (!v) continue;
        int p = std::countr_zero(v);
        // clear this pivot from existing rows
        for (size_t k = 0; k < out.size(); ++k)
            if (out[k] & (uint32_t{1} << p)) out[k] ^= v;
        out.push_back(v);
        piv.push_back(p);
    }
    // sort by pivot
    std::vector<size_t> order(out.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j)
            if (piv[order[j]] < piv[order[i]]) std::swap(order[i], order[j]);
    std::vector<uint32_t> sorted;
    std::vector<int> sorted_piv;
    for (size_t i : order) {
        sorted.push_back(out[i]);
        sorted_piv.push_back(piv[i]);
    }
    rows = std::move(sorted);
    if (pivots) *pivots = std::move(sorted_piv);
    return static_cast<int>(rows.size());
}

inline int rank(std::vector<uint32_t> rows) { return rref(rows); }

// Kernel of the linear map x -> (row_i . x)_i with `cols` variables.
// Returned vectors are masks over the columns.
inline std::vector<uint32_t> kernel(std::vector<uint32_t> rows, int cols) {
    std::vector<int> piv;
    rref(rows, &piv);
    std::vector<bool> is_pivot(cols, false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<uint32_t> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        uint32_t v = uint32_t{1} << c;
        for (size_t k = 0; k < rows.size(); ++k)
            if (rows[k] & (uint32_t{1} << c)) v |= uint32_t{1} << piv[k];
        basis.push_back(v);
    }
    return basis;
}

// Solve (row_i . x) = b_i. Any solution, or nullopt if inconsistent.
inline std::optional<uint32_t> solve(const std::vector<uint32_t>& rows,
                                     const std::vector<uint8_t>& b) {
    // augmented elimination; keep track of rhs per reduced row
    std::vector<uint32_t> red;
    std::vector<uint8_t> rhs;
    std::vector<int> piv;
    for (size_t i = 0; i < rows.size(); ++i) {
        uint32_t v = rows[i];
        uint8_t y = b[i];
        for (size_t k = 0; k < red.size(); ++k)
            if (v & (uint32_t{1} << piv[k])) {
                v ^= red[k];
                y ^= rhs[k];
            }
        if (!v) {
            if (y) return std::nullopt;
            continue;
        }
        int p = std::countr_zero(v);
        for (size_t k = 0; k < red.size(); ++k)
            if (red[k] & (uint32_t{1} << p)) {
                red[k] ^= v;
                rhs[k] ^= y;
            }
        red.push_back(v);
        rhs.push_back(y);
        piv.push_back(p);
    }
    uint32_t x = 0;
    for (size_t k = 0; k < red.size(); ++k)
        if (rhs[k]) x |= uint32_t{1} << piv[k];
    return x;
}

// Inverse of an n x n matrix given as rows, or nullopt if singular.
inline std::optional<std::vector<uint32_t>> invert(const std::vector<uint32_t>& rows_in, int n) {
    std::vector<uint64_t> aug(n);  // low n bits matrix, high n bits identity
    for (int i = 0; i < n; ++i)
        aug[i] = rows_in[i] | (uint64_t{1} << (n + i));
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int sel = -1;
        for (int i = r; i < n; ++i)
            if (aug[i] & (uint64_t{1} << c)) {
                sel = i;
                break;
            }
        if (sel < 0) return std::nullopt;
        std::swap(aug[r], aug[sel]);
        for (int i = 0; i < n; ++i)
            if (i != r && (aug[i] & (uint64_t{1} << c))) aug[i] ^= aug[r];
        ++r;
    }
    if (r < n) return std::nullopt;
    // aug rows are now sorted so that row i has pivot i
    std::vector<uint32_t> inv(n);
    for (int i = 0; i < n; ++i) {
        uint32_t col = static_cast<uint32_t>(aug[i] >> n);
        // col holds row i of the inverse expressed against the identity half
        inv[i] = col;
    }
    return inv;
}

}  // namespace bnt::gf2

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bnt/boolfun.hpp"

namespace bnt {

// Linear subspace of F_2^m. Rows are m-bit vectors; canonical form is
// RREF with the pivot of a row at its lowest set bit, rows sorted by pivot.
struct Subspace {
    int m = 0;
    std::vector<uint32_t> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

// Affine subspace a + V; canonical translate has zero bits at V's pivots.
struct Flat {
    Subspace space;
    uint32_t translate = 0;

    int dim() const { return space.dim(); }
};

uint64_t gaussian_binomial(int m, int r);

// RREF-canonicalize; throws std::invalid_argument on dependent rows if
// `require_full_rank`.
Subspace canonicalize(const Subspace& s, bool require_full_rank = true);
// Reduce a modulo V (zero out pivot coordinates).
uint32_t canonical_translate(const Subspace& canon, uint32_t a);
Flat canonicalize(const Flat& f);

// Visit every r-dimensional subspace exactly once, in canonical order.
void for_each_subspace(int m, int r, const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> all_subspaces(int m, int r);

// The 2^r points of V, indexed by t -> xor of basis rows selected by t's
// bits (stored row order).
std::vector<uint32_t> span_points(const Subspace& s);
// Canonical coset representatives, 2^(m-r) of them, ascending.
std::vector<uint32_t> coset_reps(const Subspace& canon);

// Dual functionals and complements for a flat.
struct LiftData {
    // linear parts lambda_i with lambda_i . b_j = delta_ij, plus the
    // constants lambda_i . a, so ell_i(x) = lambda_i.x + const_i maps
    // a + sum t_j b_j to t_i
    std::vector<uint32_t> functionals;
    std::vector<uint8_t> functional_consts;
    std::vector<uint32_t> complement_basis;  // completes the basis to F_2^m
    std::vector<uint32_t> orthogonal;        // basis of V^perp
};
LiftData lift_data(const Flat& f);

// Restriction of f to the flat: t -> f(a + sum t_i b_i).
BoolFun restrict_to(const BoolFun& f, const Flat& flat);

// "basis=<hex row>,<hex row>,...;a=<hex>"
Flat parse_flat(const std::string& text, int m);
std::string format_flat(const Flat& f);

}  // namespace bnt

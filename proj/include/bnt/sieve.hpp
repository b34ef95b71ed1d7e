#pragma once

#include <cstdint>

#include "bnt/spaces.hpp"

namespace bnt {

// Pure quadratic form in B(2,2,m) as a C(m,2)-bit coefficient vector.
// Pair (i,j), 1 <= i < j <= m, in lexicographic order; bit position is
// the rank of the pair in that order.
struct QuadForm {
    int m = 0;
    uint32_t index = 0;

    bool operator==(const QuadForm& o) const { return m == o.m && index == o.index; }
};

int pair_count(int m);
int pair_index(int i, int j, int m);  // 1-based, i < j

BoolFun quad_to_fun(const QuadForm& q);
// Quadratic part of any function's ANF (higher-degree terms ignored).
QuadForm quad_part(const BoolFun& f);

// Survivor set over all of B(2,2,m): bit at a QuadForm's index.
struct QSet {
    int m = 0;
    std::vector<uint64_t> bits;

    static QSet full(int m);
    bool test(uint32_t idx) const { return (bits[idx >> 6] >> (idx & 63)) & 1; }
    void clear(uint32_t idx) { bits[idx >> 6] &= ~(uint64_t{1} << (idx & 63)); }
    uint64_t count() const;
    std::vector<uint32_t> members() const;
};

struct QuadRestriction {
    QuadForm quad;  // quadratic part of f|flat, on dim(flat) variables
    int degree;     // full degree of the restriction
};
QuadRestriction quad_restriction(const BoolFun& f, const Flat& flat);

// q0 in B(2,2,m) with quad_restriction(q0, flat).quad == rho, built by
// substituting the flat's dual functionals into each monomial.
QuadForm quad_lift(const QuadForm& rho, const Flat& flat);

// Kernel of the quadratic restriction map res restricted to B(2,2,m),
// as index masks; depends only on V, dimension C(m,2) - C(dim V,2).
std::vector<uint32_t> kernel_basis(const Subspace& V);

// Algorithm: start from all of B(2,2,m); for every ceil(m/2)-flat where
// the restriction has degree <= 2, clear the lifted coset q0 + K_V.
// Survivors are exactly the q with f+q abnormal. m <= 8.
QSet sieving(const BoolFun& f, int workers = 1);

}  // namespace bnt

#pragma once

#include <optional>
#include <vector>

#include "bnt/spaces.hpp"

namespace bnt {

enum class NormKind { Normal, WeaklyNormal, Abnormal };

struct NormalityClass {
    NormKind kind;
    int half_degree;  // deg_ceil(m/2)(f)
    std::optional<Flat> witness;
};

// deg of f restricted to the flat; 0 for the zero restriction.
int relative_degree(const BoolFun& f, const Flat& flat);

struct RDegree {
    int value;
    Flat witness;
};
// min over all flats a+V with dim V = r; witness in canonical
// enumeration order (subspaces outer, cosets inner), early exit at 0.
RDegree r_degree(const BoolFun& f, int r);

// Two-parallel-coset test over all (ceil(m/2)-1)-subspaces; equivalent
// to deg_ceil(m/2)(f) >= 2.
bool is_abnormal(const BoolFun& f);

NormalityClass classify_normality(const BoolFun& f);

enum class DTableMode { ExactDegree, DegreeAtMost };

struct DTable {
    int m = 0, r = 0, k = 0;
    DTableMode mode = DTableMode::DegreeAtMost;
    int max_value = 0;
    std::vector<uint64_t> histogram;  // histogram[v] = #functions with r-degree v
    uint64_t functions_used = 0;
    uint64_t predicted_work = 0;  // brute-force work factor, saturated
};

// Max r-degree over the supplied representatives whose degree matches
// (k, mode). Throws on an empty stream or mixed variable counts.
DTable d_table(const std::vector<BoolFun>& functions, int r, int k, DTableMode mode);

// Monotonicity consistency for combined tables:
// D_r(k, m') <= D_r(min{k, m}, m) for m <= m'.
bool check_mono(const DTable& larger_m, const DTable& smaller_m);

uint64_t work_factor(uint64_t n_functions, int r, int m);

}  // namespace bnt

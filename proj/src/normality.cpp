#include "bnt/normality.hpp"

#include <bit>
#include <stdexcept>

namespace bnt {

namespace {

// degree of the restriction given its truth table, in place
int table_degree(std::vector<uint8_t>& t) {
    mobius_inplace(t);
    int d = 0;
    for (size_t mask = 0; mask < t.size(); ++mask)
        if (t[mask]) d = std::max(d, std::popcount(mask));
    return d;
}

}  // namespace

int relative_degree(const BoolFun& f, const Flat& flat) {
    BoolFun g = restrict_to(f, flat);
    std::vector<uint8_t> t = g.table;
    return table_degree(t);
}

RDegree r_degree(const BoolFun& f, int r) {
    if (r < 1 || r > f.m) throw std::domain_error("r_degree: need 1 <= r <= m");
    RDegree best{f.m + 1, {}};
    std::vector<uint8_t> t(size_t{1} << r);
    for_each_subspace(f.m, r, [&](const Subspace& V) {
        if (best.value == 0) return;
        auto pts = span_points(V);
        for (uint32_t a : coset_reps(V)) {
            for (size_t i = 0; i < pts.size(); ++i) t[i] = f.table[a ^ pts[i]];
            int d = table_degree(t);
            if (d < best.value) {
                best.value = d;
                best.witness = Flat{V, a};
                if (d == 0) return;
            }
        }
    });
    return best;
}

bool is_abnormal(const BoolFun& f) {
    int dim = (f.m + 1) / 2 - 1;
    bool found = false;
    for_each_subspace(f.m, dim, [&](const Subspace& V) {
        if (found) return;
        auto pts = span_points(V);
        int count = 0;
        for (uint32_t a : coset_reps(V)) {
            uint8_t first = f.table[a ^ pts[0]];
            bool constant = true;
            for (size_t i = 1; i < pts.size(); ++i)
                if (f.table[a ^ pts[i]] != first) {
                    constant = false;
                    break;
                }
            if (constant && ++count == 2) {
                found = true;
                return;
            }
        }
    });
    return !found;
}

NormalityClass classify_normality(const BoolFun& f) {
    RDegree rd = r_degree(f, (f.m + 1) / 2);
    NormKind kind = rd.value == 0   ? NormKind::Normal
                    : rd.value == 1 ? NormKind::WeaklyNormal
                                    : NormKind::Abnormal;
    return NormalityClass{kind, rd.value, rd.witness};
}

uint64_t work_factor(uint64_t n_functions, int r, int m) {
    unsigned __int128 w = n_functions;
    w *= (unsigned __int128){1} << (m - r);
    w *= gaussian_binomial(m, r);
    w *= (unsigned __int128)r << r;
    if (w > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
    return static_cast<uint64_t>(w);
}

DTable d_table(const std::vector<BoolFun>& functions, int r, int k, DTableMode mode) {
    if (functions.empty()) throw std::invalid_argument("d_table: empty stream");
    int m = functions[0].m;
    DTable t;
    t.m = m;
    t.r = r;
    t.k = k;
    t.mode = mode;
    t.histogram.assign(static_cast<size_t>(r) + 1, 0);
    for (const BoolFun& f : functions) {
        if (f.m != m) throw std::invalid_argument("d_table: mixed variable counts");
        int d = degree(f);
        if (mode == DTableMode::ExactDegree ? d != k : d > k) continue;
        int v = r_degree(f, r).value;
        t.max_value = std::max(t.max_value, v);
        ++t.histogram[static_cast<size_t>(v)];
        ++t.functions_used;
    }
    if (t.functions_used == 0) throw std::invalid_argument("d_table: no function matches the degree filter");
    t.predicted_work = work_factor(t.functions_used, r, m);
    return t;
}

bool check_mono(const DTable& larger_m, const DTable& smaller_m) {
    if (larger_m.r != smaller_m.r) return true;  // incomparable
    if (larger_m.mode != DTableMode::DegreeAtMost || smaller_m.mode != DTableMode::DegreeAtMost)
        return true;  // the lemma is about D, not D-dagger
    if (larger_m.m < smaller_m.m) return check_mono(smaller_m, larger_m);
    if (std::min(larger_m.k, smaller_m.m) > smaller_m.k) return true;
    return larger_m.max_value <= smaller_m.max_value;
}

}  // namespace bnt

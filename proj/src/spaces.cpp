#include "bnt/spaces.hpp"

#include <bit>
#include <stdexcept>

#include "bnt/gf2.hpp"

namespace bnt {

uint64_t gaussian_binomial(int m, int r) {
    if (r < 0 || m < 0) throw std::domain_error("gaussian_binomial: need 0 <= r, 0 <= m");
    if (r > m) return 0;
    // Pascal-style recurrence [m,r] = [m-1,r-1] + 2^r [m-1,r]
    std::vector<std::vector<unsigned __int128>> g(m + 1, std::vector<unsigned __int128>(r + 1, 0));
    for (int i = 0; i <= m; ++i) g[i][0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= r && j <= i; ++j)
            g[i][j] = g[i - 1][j - 1] + ((unsigned __int128){1} << j) * g[i - 1][j];
    if (g[m][r] > (unsigned __int128)UINT64_MAX)
        throw std::overflow_error("gaussian_binomial: result exceeds 64 bits");
    return static_cast<uint64_t>(g[m][r]);
}

Subspace canonicalize(const Subspace& s, bool require_full_rank) {
    std::vector<uint32_t> rows = s.basis;
    int rk = gf2::rref(rows);
    if (require_full_rank && rk != s.dim())
        throw std::invalid_argument("subspace basis is rank-deficient");
    return Subspace{s.m, rows};
}

uint32_t canonical_translate(const Subspace& canon, uint32_t a) {
    for (uint32_t row : canon.basis) {
        int p = std::countr_zero(row);
        if (a & (uint32_t{1} << p)) a ^= row;
    }
    return a;
}

Flat canonicalize(const Flat& f) {
    Subspace s = canonicalize(f.space);
    return Flat{s, canonical_translate(s, f.translate)};
}

void for_each_subspace(int m, int r, const std::function<void(const Subspace&)>& fn) {
    if (r < 0 || r > m) throw std::domain_error("for_each_subspace: need 0 <= r <= m");
    if (r == 0) {
        fn(Subspace{m, {}});
        return;
    }
    // iterate pivot patterns p_1 < ... < p_r, then all free-entry fillings
    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i) piv[i] = i;
    Subspace s{m, std::vector<uint32_t>(r)};
    while (true) {
        uint32_t pivot_mask = 0;
        for (int p : piv) pivot_mask |= uint32_t{1} << p;
        // free positions, row-major
        std::vector<std::pair<int, int>> free_pos;  // (row, column)
        for (int i = 0; i < r; ++i)
            for (int j = piv[i] + 1; j < m; ++j)
                if (!(pivot_mask & (uint32_t{1} << j))) free_pos.emplace_back(i, j);
        uint64_t combos = uint64_t{1} << free_pos.size();
        for (uint64_t fill = 0; fill < combos; ++fill) {
            for (int i = 0; i < r; ++i) s.basis[i] = uint32_t{1} << piv[i];
            for (size_t k = 0; k < free_pos.size(); ++k)
                if (fill & (uint64_t{1} << k))
                    s.basis[free_pos[k].first] |= uint32_t{1} << free_pos[k].second;
            fn(s);
        }
        // next pivot combination
        int i = r - 1;
        while (i >= 0 && piv[i] == m - r + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::vector<Subspace> all_subspaces(int m, int r) {
    std::vector<Subspace> out;
    out.reserve(gaussian_binomial(m, r));
    for_each_subspace(m, r, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

std::vector<uint32_t> span_points(const Subspace& s) {
    std::vector<uint32_t> pts(size_t{1} << s.dim(), 0);
    for (size_t t = 1; t < pts.size(); ++t) {
        int low = std::countr_zero(t);
        pts[t] = pts[t & (t - 1)] ^ s.basis[low];
    }
    return pts;
}

std::vector<uint32_t> coset_reps(const Subspace& canon) {
    uint32_t pivot_mask = 0;
    for (uint32_t row : canon.basis) pivot_mask |= uint32_t{1} << std::countr_zero(row);
    std::vector<int> free_bits;
    for (int j = 0; j < canon.m; ++j)
        if (!(pivot_mask & (uint32_t{1} << j))) free_bits.push_back(j);
    std::vector<uint32_t> reps(size_t{1} << free_bits.size());
    for (size_t k = 0; k < reps.size(); ++k) {
        uint32_t a = 0;
        for (size_t b = 0; b < free_bits.size(); ++b)
            if (k & (size_t{1} << b)) a |= uint32_t{1} << free_bits[b];
        reps[k] = a;
    }
    return reps;
}

LiftData lift_data(const Flat& f) {
    const Subspace& s = f.space;
    int r = s.dim();
    LiftData d;
    for (int i = 0; i < r; ++i) {
        std::vector<uint8_t> rhs(r, 0);
        rhs[i] = 1;
        auto sol = gf2::solve(s.basis, rhs);
        if (!sol) throw std::invalid_argument("lift_data: rank-deficient basis");
        d.functionals.push_back(*sol);
        d.functional_consts.push_back(
            static_cast<uint8_t>(std::popcount(*sol & f.translate) & 1));
    }
    // complete to a basis of F_2^m with unit vectors
    std::vector<uint32_t> acc = s.basis;
    for (int j = 0; j < s.m; ++j) {
        std::vector<uint32_t> probe = acc;
        probe.push_back(uint32_t{1} << j);
        if (gf2::rank(probe) > gf2::rank(acc)) {
            acc.push_back(uint32_t{1} << j);
            d.complement_basis.push_back(uint32_t{1} << j);
        }
    }
    d.orthogonal = gf2::kernel(s.basis, s.m);
    return d;
}

BoolFun restrict_to(const BoolFun& f, const Flat& flat) {
    if (flat.space.m != f.m) throw std::invalid_argument("restrict_to: dimension mismatch");
    canonicalize(flat.space);  // full-rank check
    auto pts = span_points(flat.space);
    BoolFun g(flat.dim());
    for (size_t t = 0; t < pts.size(); ++t) g.table[t] = f.table[flat.translate ^ pts[t]];
    return g;
}

Flat parse_flat(const std::string& text, int m) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_flat: " + why + " in \"" + text + "\"");
    };
    const std::string bp = "basis=";
    size_t semi = text.find(';');
    if (text.rfind(bp, 0) != 0 || semi == std::string::npos) fail("expected basis=...;a=...");
    std::string basis_part = text.substr(bp.size(), semi - bp.size());
    std::string a_part = text.substr(semi + 1);
    if (a_part.rfind("a=", 0) != 0) fail("missing a=");
    a_part = a_part.substr(2);
    auto parse_word = [&](const std::string& w) -> uint32_t {
        if (w.empty()) fail("empty hex value");
        uint32_t v = 0;
        for (char c : w) {
            int d;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
            else { fail("bad hex digit"); d = 0; }
            v = (v << 4) | static_cast<uint32_t>(d);
        }
        if (v >> m) fail("vector out of range");
        return v;
    };
    Flat flat;
    flat.space.m = m;
    size_t pos = 0;
    while (pos <= basis_part.size()) {
        size_t comma = basis_part.find(',', pos);
        std::string w = basis_part.substr(pos, comma == std::string::npos ? comma : comma - pos);
        flat.space.basis.push_back(parse_word(w));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    flat.translate = parse_word(a_part);
    canonicalize(flat.space);  // validate independence
    return flat;
}

std::string format_flat(const Flat& f) {
    auto hex = [](uint32_t v) {
        std::string s;
        do {
            s.insert(s.begin(), "0123456789abcdef"[v & 15]);
            v >>= 4;
        } while (v);
        return s;
    };
    std::string out = "basis=";
    for (size_t i = 0; i < f.space.basis.size(); ++i) {
        if (i) out += ',';
        out += hex(f.space.basis[i]);
    }
    out += ";a=" + hex(f.translate);
    return out;
}

}  // namespace bnt

#include "bnt/sieve.hpp"

#include <bit>
#include <stdexcept>

#include "bnt/gf2.hpp"
#include "bnt/parallel.hpp"

namespace bnt {

int pair_count(int m) { return m * (m - 1) / 2; }

int pair_index(int i, int j, int m) {
    // pairs with first component < i, then offset within the i block
    return (i - 1) * m - i * (i - 1) / 2 + (j - i - 1);
}

BoolFun quad_to_fun(const QuadForm& q) {
    Anf a{q.m, std::vector<uint8_t>(size_t{1} << q.m, 0)};
    for (int i = 1; i <= q.m; ++i)
        for (int j = i + 1; j <= q.m; ++j)
            if (q.index & (uint32_t{1} << pair_index(i, j, q.m)))
                a.coeffs[(size_t{1} << (i - 1)) | (size_t{1} << (j - 1))] = 1;
    return from_anf(a);
}

QuadForm quad_part(const BoolFun& f) {
    Anf a = to_anf(f);
    QuadForm q{f.m, 0};
    for (int i = 1; i <= f.m; ++i)
        for (int j = i + 1; j <= f.m; ++j)
            if (a.coeffs[(size_t{1} << (i - 1)) | (size_t{1} << (j - 1))])
                q.index |= uint32_t{1} << pair_index(i, j, f.m);
    return q;
}

QSet QSet::full(int m) {
    QSet s;
    s.m = m;
    size_t nbits = size_t{1} << pair_count(m);
    s.bits.assign((nbits + 63) / 64, ~uint64_t{0});
    if (nbits < 64) s.bits[0] = (uint64_t{1} << nbits) - 1;
    return s;
}

uint64_t QSet::count() const {
    uint64_t c = 0;
    for (uint64_t w : bits) c += std::popcount(w);
    return c;
}

std::vector<uint32_t> QSet::members() const {
    std::vector<uint32_t> out;
    for (size_t w = 0; w < bits.size(); ++w) {
        uint64_t v = bits[w];
        while (v) {
            int b = std::countr_zero(v);
            out.push_back(static_cast<uint32_t>(w * 64 + b));
            v &= v - 1;
        }
    }
    return out;
}

QuadRestriction quad_restriction(const BoolFun& f, const Flat& flat) {
    BoolFun g = restrict_to(f, flat);
    Anf a = to_anf(g);
    QuadRestriction qr{{g.m, 0}, 0};
    for (size_t mask = 0; mask < a.coeffs.size(); ++mask)
        if (a.coeffs[mask]) qr.degree = std::max(qr.degree, std::popcount(mask));
    qr.quad = quad_part(g);
    return qr;
}

namespace {

// Lift masks per restriction pair (k,l): the B(2,2,m) index mask of the
// pure quadratic part of ell_k(x) ell_l(x).
std::vector<uint32_t> lift_masks(const std::vector<uint32_t>& functionals, int m) {
    int r = static_cast<int>(functionals.size());
    std::vector<uint32_t> masks(pair_count(r), 0);
    for (int k = 1; k <= r; ++k)
        for (int l = k + 1; l <= r; ++l) {
            uint32_t lk = functionals[k - 1], ll = functionals[l - 1];
            uint32_t mask = 0;
            for (int u = 1; u <= m; ++u)
                for (int v = u + 1; v <= m; ++v) {
                    uint8_t bit = (((lk >> (u - 1)) & (ll >> (v - 1))) ^
                                   ((ll >> (u - 1)) & (lk >> (v - 1)))) & 1;
                    if (bit) mask |= uint32_t{1} << pair_index(u, v, m);
                }
            masks[pair_index(k, l, r)] = mask;
        }
    return masks;
}

}  // namespace

QuadForm quad_lift(const QuadForm& rho, const Flat& flat) {
    LiftData ld = lift_data(flat);
    auto masks = lift_masks(ld.functionals, flat.space.m);
    QuadForm q{flat.space.m, 0};
    for (size_t p = 0; p < masks.size(); ++p)
        if (rho.index & (uint32_t{1} << p)) q.index ^= masks[p];
    return q;
}

std::vector<uint32_t> kernel_basis(const Subspace& V) {
    int m = V.m, r = V.dim();
    if (pair_count(m) > 28) throw std::domain_error("kernel_basis: supports m <= 8");
    std::vector<uint32_t> rows(pair_count(r), 0);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            int col = pair_index(i, j, m);
            for (int k = 1; k <= r; ++k)
                for (int l = k + 1; l <= r; ++l) {
                    uint32_t bk = V.basis[k - 1], bl = V.basis[l - 1];
                    uint8_t bit = (((bk >> (i - 1)) & (bl >> (j - 1))) ^
                                   ((bl >> (i - 1)) & (bk >> (j - 1)))) & 1;
                    if (bit) rows[pair_index(k, l, r)] |= uint32_t{1} << col;
                }
        }
    return gf2::kernel(rows, pair_count(m));
}

QSet sieving(const BoolFun& f, int workers) {
    int m = f.m;
    if (m > 8) throw std::domain_error("sieving: the 2^C(m,2) bit vector needs m <= 8");
    int r = (m + 1) / 2;
    auto subspaces = all_subspaces(m, r);
    size_t words = QSet::full(m).bits.size();
    workers = std::max(1, workers);
    std::vector<std::vector<uint64_t>> eliminated(static_cast<size_t>(workers),
                                                  std::vector<uint64_t>(words, 0));

    parallel_chunks(subspaces.size(), workers, [&](int w, uint64_t b, uint64_t e) {
        std::vector<uint64_t>& elim = eliminated[static_cast<size_t>(w)];
        std::vector<uint8_t> tab(size_t{1} << r);
        for (uint64_t si = b; si < e; ++si) {
            const Subspace& V = subspaces[si];
            auto pts = span_points(V);
            auto kernel = kernel_basis(V);
            LiftData ld = lift_data(Flat{V, 0});
            auto lmask = lift_masks(ld.functionals, m);
            for (uint32_t a : coset_reps(V)) {
                for (size_t t = 0; t < pts.size(); ++t) tab[t] = f.table[a ^ pts[t]];
                mobius_inplace(tab);
                bool low_degree = true;
                uint32_t rho = 0;
                for (size_t mask = 0; mask < tab.size() && low_degree; ++mask) {
                    if (!tab[mask]) continue;
                    int c = std::popcount(mask);
                    if (c > 2) low_degree = false;
                }
                if (!low_degree) continue;
                for (int k = 1; k <= r; ++k)
                    for (int l = k + 1; l <= r; ++l)
                        if (tab[(size_t{1} << (k - 1)) | (size_t{1} << (l - 1))])
                            rho |= uint32_t{1} << pair_index(k, l, r);
                // lift and clear the whole coset q0 + K_V, Gray order
                uint32_t q0 = 0;
                uint32_t rr = rho;
                while (rr) {
                    q0 ^= lmask[std::countr_zero(rr)];
                    rr &= rr - 1;
                }
                uint64_t combos = uint64_t{1} << kernel.size();
                uint32_t cur = q0;
                elim[cur >> 6] |= uint64_t{1} << (cur & 63);
                for (uint64_t i = 1; i < combos; ++i) {
                    cur ^= kernel[std::countr_zero(i)];
                    elim[cur >> 6] |= uint64_t{1} << (cur & 63);
                }
            }
        }
    });

    QSet q = QSet::full(m);
    for (const auto& elim : eliminated)
        for (size_t w = 0; w < words; ++w) q.bits[w] &= ~elim[w];
    return q;
}

}  // namespace bnt

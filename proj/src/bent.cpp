#include "bnt/bent.hpp"

#include <cassert>
#include <stdexcept>

namespace bnt {

SpectralClass spectral_class(const BoolFun& f) {
    WalshSpectrum w = walsh(f);
    int zeros = 0;
    bool bent_ok = (f.m % 2 == 0);
    bool nb_ok = (f.m % 2 == 1);
    int32_t bent_mag = bent_ok ? int32_t{1} << (f.m / 2) : 0;
    int32_t nb_mag = nb_ok ? int32_t{1} << ((f.m + 1) / 2) : 0;
    for (int32_t v : w.values) {
        if (v == 0) ++zeros;
        if (bent_ok && v != bent_mag && v != -bent_mag) bent_ok = false;
        if (nb_ok && v != 0 && v != nb_mag && v != -nb_mag) nb_ok = false;
    }
    if (nb_ok && zeros == 0) nb_ok = false;  // spectrum set must contain 0
    SpecKind kind = bent_ok ? SpecKind::Bent : nb_ok ? SpecKind::NearBent : SpecKind::Other;
    // weight sanity for the recognized spectra
    if (kind != SpecKind::Other) {
        int wt = (int(f.size()) - w.values[0]) / 2;
        int half = int(f.size()) / 2;
        if (kind == SpecKind::Bent) {
            int d = 1 << (f.m / 2 - 1);
            assert(wt == half - d || wt == half + d);
        } else {
            int d = 1 << ((f.m + 1) / 2 - 1);
            assert(wt == half || wt == half - d || wt == half + d);
        }
        (void)wt;
        (void)half;
    }
    return SpectralClass{kind, zeros};
}

bool is_bent(const BoolFun& f) { return spectral_class(f).kind == SpecKind::Bent; }
bool is_near_bent(const BoolFun& f) { return spectral_class(f).kind == SpecKind::NearBent; }

BoolFun dual(const BoolFun& f) {
    WalshSpectrum w = walsh(f);
    int32_t mag = int32_t{1} << (f.m / 2);
    BoolFun d(f.m);
    for (size_t a = 0; a < w.values.size(); ++a) {
        if (f.m % 2 != 0 || (w.values[a] != mag && w.values[a] != -mag))
            throw std::domain_error("dual: input is not bent");
        d.table[a] = w.values[a] < 0;
    }
    return d;
}

bool are_complementary(const BoolFun& g, const BoolFun& h) {
    if (g.m != h.m) throw std::invalid_argument("are_complementary: variable counts differ");
    if (!is_near_bent(g) || !is_near_bent(h))
        throw std::domain_error("are_complementary: inputs must be near-bent");
    WalshSpectrum wg = walsh(g), wh = walsh(h);
    for (size_t a = 0; a < wg.values.size(); ++a)
        if ((wg.values[a] == 0) == (wh.values[a] == 0)) return false;
    return true;
}

namespace {

DicksonForm make_dickson(int m, int k, bool balanced, int b) {
    BoolFun f(m);
    for (size_t x = 0; x < f.size(); ++x) {
        uint8_t v = static_cast<uint8_t>(balanced ? (x >> (2 * k)) & 1 : b);
        for (int i = 0; i < k; ++i) v ^= static_cast<uint8_t>((x >> (2 * i)) & (x >> (2 * i + 1)) & 1);
        f.table[x] = v;
    }
    // witness: odd unit vectors e_1, e_3, ..., e_{2k-1}, then untouched
    // coordinates; the Q_k boundary case falls back to a linear witness
    int half = (m + 1) / 2;
    Subspace w{m, {}};
    for (int i = 1; i <= 2 * k - 1 && int(w.basis.size()) < half; i += 2)
        w.basis.push_back(uint32_t{1} << (i - 1));
    int start = balanced ? 2 * k + 2 : 2 * k + 1;
    for (int j = start; j <= m && int(w.basis.size()) < half; ++j)
        w.basis.push_back(uint32_t{1} << (j - 1));
    bool constant = true;
    if (int(w.basis.size()) < half) {
        // only reachable for balanced forms with 2k+1 = m
        w.basis.push_back(uint32_t{1} << (2 * k));
        constant = false;
    }
    return DicksonForm{std::move(f), std::move(w), constant};
}

}  // namespace

DicksonForm dickson_balanced(int m, int k) {
    if (k < 0 || 2 * k + 1 > m) throw std::domain_error("dickson_balanced: need k <= (m-1)/2");
    return make_dickson(m, k, true, 0);
}

DicksonForm dickson_unbalanced(int m, int k, int b) {
    if (k < 0 || 2 * k > m) throw std::domain_error("dickson_unbalanced: need k <= m/2");
    return make_dickson(m, k, false, b);
}

}  // namespace bnt

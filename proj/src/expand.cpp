#include "bnt/expand.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

#include "bnt/bent.hpp"

namespace bnt {

namespace {

// Walsh block that governs a label: drop the first character.
std::string block_of(const std::string& lambda) { return lambda.substr(1); }

// Global index of position t within the block sigma of an n-variable
// function: sigma_1 occupies the top coordinate, sigma_2 the next, ...
size_t block_index(int n, const std::string& sigma, size_t t) {
    size_t a = t;
    for (size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] == '1') a |= size_t{1} << (n - 1 - i);
    return a;
}

BoolFun block_restrict(const BoolFun& f, const std::string& sigma) {
    BoolFun g(f.m - static_cast<int>(sigma.size()));
    for (size_t t = 0; t < g.size(); ++t) g.table[t] = f.table[block_index(f.m, sigma, t)];
    return g;
}

bool spectrum_within(const BoolFun& phi, const std::vector<int32_t>& allowed) {
    WalshSpectrum w = walsh(phi);
    for (int32_t v : w.values)
        if (!std::binary_search(allowed.begin(), allowed.end(), v)) return false;
    return true;
}

}  // namespace

std::vector<int32_t> restriction_spectrum(int m, int r) {
    std::vector<int32_t> w;
    int32_t top = int32_t{1} << (m / 2);
    int32_t step = int32_t{1} << (m / 2 - r + 1);
    for (int i = 0; i <= (1 << r); ++i) w.push_back(top - i * step);
    std::sort(w.begin(), w.end());
    return w;
}

ZeroIndicator zero_indicator(const BoolFun& g) {
    if (!is_near_bent(g)) throw std::domain_error("zero_indicator: g is not near-bent");
    int n = g.m;
    WalshSpectrum w = walsh(g);
    ZeroIndicator zi{BoolFun(n), {}};
    for (size_t a = 0; a < w.values.size(); ++a) zi.zeta.table[a] = (w.values[a] == 0);
    for (int len = 1; len <= 3 && len <= n; ++len)
        for (uint32_t bits = 0; bits < (uint32_t{1} << len); ++bits) {
            std::string lambda;
            for (int i = 0; i < len; ++i) lambda += (bits >> i) & 1 ? '1' : '0';
            std::string sigma = block_of(lambda);
            int zeros = 0;
            size_t block = size_t{1} << (n - sigma.size());
            for (size_t t = 0; t < block; ++t)
                zeros += zi.zeta.table[block_index(n, sigma, t)];
            zi.block_zeros[lambda] = zeros;
        }
    return zi;
}

BoolFun normalize_prefix(const BoolFun& g) {
    ZeroIndicator zi = zero_indicator(g);
    int m = g.m + 1;
    if (zi.block_zeros.at("00") <= (1 << (m - 3))) return g;
    // adding the top coordinate function translates the spectrum and
    // swaps the two top-level zero blocks
    return add(g, linear_fun(g.m, uint32_t{1} << (g.m - 1)));
}

AdmissibleSet admissible_set(const BoolFun& g, const std::string& lambda, int budget_bits) {
    int m = g.m + 1;
    if (m % 2 != 0) throw std::domain_error("admissible_set: g must have m-1 variables, m even");
    int r = static_cast<int>(lambda.size());
    if (r < 1 || r > 3) throw std::domain_error("admissible_set: |lambda| must be 1..3");
    ZeroIndicator zi = zero_indicator(g);
    WalshSpectrum w = walsh(g);
    std::string sigma = block_of(lambda);
    int nr = m - r;  // phi variables
    int32_t mag = int32_t{1} << (m / 2);

    Candidate base{lambda, BoolFun(nr), std::vector<uint8_t>(size_t{1} << nr, 0)};
    std::vector<size_t> free_pos;
    int forced_ones = 0;
    for (size_t t = 0; t < base.phi.size(); ++t) {
        int32_t v = w.values[block_index(g.m, sigma, t)];
        if (v == mag) {
            base.forced[t] = 1;
        } else if (v == -mag) {
            base.forced[t] = 1;
            base.phi.table[t] = 1;
            ++forced_ones;
        } else {
            free_pos.push_back(t);
        }
    }
    if (static_cast<int>(free_pos.size()) > budget_bits)
        throw resource_error("admissible_set: block " + lambda + " has " +
                             std::to_string(free_pos.size()) + " free positions, budget is " +
                             std::to_string(budget_bits));

    auto allowed = restriction_spectrum(m, r);
    // weights compatible with Walsh(phi)(0) in W_r
    std::set<int> allowed_wt;
    for (int32_t v : allowed) {
        int wt2 = (1 << nr) - v;
        if (wt2 >= 0 && wt2 % 2 == 0 && wt2 / 2 <= (1 << nr)) allowed_wt.insert(wt2 / 2);
    }
    BoolFun zeta_block = block_restrict(zi.zeta, sigma);

    AdmissibleSet out{lambda, {}};
    uint64_t combos = uint64_t{1} << free_pos.size();
    for (uint64_t fill = 0; fill < combos; ++fill) {
        if (!allowed_wt.count(forced_ones + std::popcount(fill))) continue;
        Candidate c = base;
        for (size_t k = 0; k < free_pos.size(); ++k)
            if (fill & (uint64_t{1} << k)) c.phi.table[free_pos[k]] = 1;
        if (!spectrum_within(c.phi, allowed)) continue;
        if (!spectrum_within(add(c.phi, zeta_block), allowed)) continue;
        out.members.push_back(std::move(c));
    }
    return out;
}

uint64_t key_mask(const BoolFun& phi) {
    int m = phi.m + 2;
    if (m % 2 != 0 || phi.m > 6)
        throw std::domain_error("key_mask: phi must have m-2 variables, m even, m <= 8");
    int32_t mod = int32_t{1} << (m / 2);
    int32_t half = mod >> 1;
    WalshSpectrum w = walsh(phi);
    uint64_t mask = 0;
    for (size_t a = 0; a < w.values.size(); ++a) {
        int32_t residue = ((w.values[a] % mod) + mod) % mod;
        if (residue == half) mask |= uint64_t{1} << a;
    }
    return mask;
}

std::vector<BoolFun> expansion(const BoolFun& g_in, const ExpandOptions& opts) {
    int m = g_in.m + 1;
    if (m != 6 && m != 8) throw std::domain_error("expansion: supports m = 6 or m = 8");
    if (!is_near_bent(g_in)) throw std::domain_error("expansion: g is not near-bent");

    BoolFun g = normalize_prefix(g_in);
    bool shifted = !(g == g_in);
    ZeroIndicator zi = zero_indicator(g);
    auto w1 = restriction_spectrum(m, 1);

    AdmissibleSet a00 = admissible_set(g, "00", opts.budget_bits);
    std::unordered_map<uint64_t, std::vector<size_t>> dict;
    for (size_t i = 0; i < a00.members.size(); ++i)
        dict[key_mask(a00.members[i].phi)].push_back(i);

    BoolFun zeta0 = block_restrict(zi.zeta, "0");
    BoolFun zeta1 = block_restrict(zi.zeta, "1");

    std::set<std::vector<uint8_t>> seen;
    std::vector<BoolFun> out;
    auto try_right = [&](const BoolFun& R) {
        uint64_t kappa = key_mask(R);
        auto it = dict.find(kappa);
        if (it == dict.end()) return;
        for (size_t li : it->second) {
            const BoolFun& L = a00.members[li].phi;
            BoolFun phi0 = concat(L, R);
            if (!spectrum_within(phi0, w1)) continue;
            BoolFun phi1 = add(phi0, zi.zeta);
            if (!spectrum_within(phi1, w1)) continue;
            BoolFun Phi = concat(phi0, phi1);
            if (!is_bent(Phi)) continue;
            BoolFun f = dual(Phi);
            if (shifted) f = add(f, linear_fun(m, uint32_t{1} << (m - 2)));
            if (seen.insert(f.table).second) out.push_back(std::move(f));
        }
    };

    if (m == 6) {
        // two-level split: the 01 block is small enough to enumerate directly
        AdmissibleSet a01 = admissible_set(g, "01", opts.budget_bits);
        for (const Candidate& c : a01.members) try_right(c.phi);
    } else {
        AdmissibleSet a010 = admissible_set(g, "010", opts.budget_bits);
        AdmissibleSet a011 = admissible_set(g, "011", opts.budget_bits);
        auto w2 = restriction_spectrum(m, 2);
        for (const Candidate& cl : a010.members)
            for (const Candidate& cr : a011.members) {
                BoolFun R = concat(cl.phi, cr.phi);
                if (!spectrum_within(R, w2)) continue;
                if (!spectrum_within(add(R, zeta1), w2)) continue;
                try_right(R);
            }
    }

    std::sort(out.begin(), out.end());
    if (opts.verify) {
        for (const BoolFun& f : out) {
            if (!is_bent(f)) throw std::logic_error("expansion: output is not bent");
            BoolFun f0(m - 1);
            std::copy(f.table.begin(), f.table.begin() + f0.table.size(), f0.table.begin());
            if (!(f0 == g_in)) throw std::logic_error("expansion: output does not restrict to g");
        }
    }
    return out;
}

}  // namespace bnt

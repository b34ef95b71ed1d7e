#include "bnt/boolfun.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bnt {

void mobius_inplace(std::vector<uint8_t>& bits) {
    size_t n = bits.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("mobius: length is not a power of two");
    for (size_t step = 1; step < n; step <<= 1)
        for (size_t i = 0; i < n; i += step << 1)
            for (size_t j = i; j < i + step; ++j)
                bits[j + step] ^= bits[j];
}

Anf to_anf(const BoolFun& f) {
    Anf a{f.m, f.table};
    mobius_inplace(a.coeffs);
    return a;
}

BoolFun from_anf(const Anf& a) {
    BoolFun f{a.m, a.coeffs};
    mobius_inplace(f.table);
    return f;
}

FunStats stats(const BoolFun& f) {
    Anf a = to_anf(f);
    FunStats s;
    for (size_t mask = 0; mask < a.coeffs.size(); ++mask) {
        if (!a.coeffs[mask]) continue;
        int c = std::popcount(mask);
        s.deg = std::max(s.deg, c);
        if (!s.val || c < *s.val) s.val = c;
    }
    for (uint8_t b : f.table) s.wt += b;
    return s;
}

int degree(const BoolFun& f) {
    Anf a = to_anf(f);
    int d = 0;
    for (size_t mask = 0; mask < a.coeffs.size(); ++mask)
        if (a.coeffs[mask]) d = std::max(d, std::popcount(mask));
    return d;
}

int weight(const BoolFun& f) {
    int w = 0;
    for (uint8_t b : f.table) w += b;
    return w;
}

WalshSpectrum walsh(const BoolFun& f) {
    size_t n = f.size();
    WalshSpectrum w{f.m, std::vector<int32_t>(n)};
    for (size_t x = 0; x < n; ++x) w.values[x] = f.table[x] ? -1 : 1;
    for (size_t step = 1; step < n; step <<= 1)
        for (size_t i = 0; i < n; i += step << 1)
            for (size_t j = i; j < i + step; ++j) {
                int32_t u = w.values[j], v = w.values[j + step];
                w.values[j] = u + v;
                w.values[j + step] = u - v;
            }
    return w;
}

BoolFun concat(const BoolFun& g, const BoolFun& h) {
    if (g.m != h.m) throw std::invalid_argument("concat: variable counts differ");
    BoolFun f(g.m + 1);
    std::copy(g.table.begin(), g.table.end(), f.table.begin());
    std::copy(h.table.begin(), h.table.end(), f.table.begin() + g.table.size());
    return f;
}

BoolFun mm_construct(const std::vector<uint32_t>& pi, const BoolFun& g) {
    int k = g.m;
    size_t n = size_t{1} << k;
    if (pi.size() != n) throw std::invalid_argument("mm_construct: pi has wrong size");
    std::vector<uint8_t> seen(n, 0);
    for (uint32_t v : pi) {
        if (v >= n || seen[v]) throw std::invalid_argument("mm_construct: pi is not a bijection");
        seen[v] = 1;
    }
    BoolFun f(2 * k);
    for (size_t y = 0; y < n; ++y)
        for (size_t x = 0; x < n; ++x)
            f.table[(y << k) | x] =
                static_cast<uint8_t>((std::popcount(x & size_t{pi[y]}) & 1) ^ g.table[y]);
    return f;
}

BoolFun add(const BoolFun& f, const BoolFun& g) {
    if (f.m != g.m) throw std::invalid_argument("add: variable counts differ");
    BoolFun r = f;
    for (size_t x = 0; x < r.size(); ++x) r.table[x] ^= g.table[x];
    return r;
}

BoolFun constant_fun(int m, uint8_t c) {
    BoolFun f(m);
    if (c) std::fill(f.table.begin(), f.table.end(), uint8_t{1});
    return f;
}

BoolFun linear_fun(int m, uint32_t mask, uint8_t c) {
    BoolFun f(m);
    for (size_t x = 0; x < f.size(); ++x)
        f.table[x] = static_cast<uint8_t>((std::popcount(static_cast<uint32_t>(x) & mask) & 1) ^ c);
    return f;
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, size_t pos) {
    throw std::invalid_argument(what + " at position " + std::to_string(pos));
}

}  // namespace

BoolFun parse_anf(std::string_view text, int m) {
    if (m < 1 || m > kMaxVars) throw std::invalid_argument("parse_anf: bad variable count");
    Anf a{m, std::vector<uint8_t>(size_t{1} << m, 0)};
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) {
            if (first) parse_fail("parse_anf: empty input", i);
            break;
        }
        if (!first) {
            if (text[i] != '+') parse_fail("parse_anf: expected '+'", i);
            ++i;
            skip_ws();
        }
        first = false;
        if (i == text.size()) parse_fail("parse_anf: dangling '+'", i);
        if (text[i] == '0' || text[i] == '1') {
            if (text[i] == '1') a.coeffs[0] ^= 1;
            ++i;
            continue;
        }
        uint32_t mask = 0;
        while (true) {
            if (i == text.size() || text[i] != 'x') parse_fail("parse_anf: expected variable", i);
            ++i;
            size_t start = i;
            int idx = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                idx = idx * 10 + (text[i] - '0');
                ++i;
                if (idx > kMaxVars) break;
            }
            if (i == start) parse_fail("parse_anf: missing variable index", i);
            if (idx < 1 || idx > m) parse_fail("parse_anf: variable index out of range", start);
            mask |= uint32_t{1} << (idx - 1);
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        a.coeffs[mask] ^= 1;
    }
    return from_anf(a);
}

std::string format_anf(const BoolFun& f) {
    Anf a = to_anf(f);
    std::string out;
    for (size_t mask = 0; mask < a.coeffs.size(); ++mask) {
        if (!a.coeffs[mask]) continue;
        if (!out.empty()) out += " + ";
        if (mask == 0) {
            out += '1';
            continue;
        }
        bool first = true;
        for (int i = 0; i < f.m; ++i)
            if (mask & (size_t{1} << i)) {
                if (!first) out += '*';
                out += 'x';
                out += std::to_string(i + 1);
                first = false;
            }
    }
    if (out.empty()) out = "0";
    return out;
}

BoolFun parse_hex(std::string_view text, int m) {
    if (m < 2 || m > kMaxVars) throw std::invalid_argument("parse_hex: need 2 <= m <= 16");
    size_t digits = size_t{1} << (m - 2);
    if (text.size() != digits)
        throw std::invalid_argument("parse_hex: expected " + std::to_string(digits) +
                                    " hex digits, got " + std::to_string(text.size()));
    BoolFun f(m);
    for (size_t d = 0; d < digits; ++d) {
        char c = text[d];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else parse_fail("parse_hex: invalid digit", d);
        // leftmost digit holds the highest table indices
        size_t base = (digits - 1 - d) * 4;
        for (int b = 0; b < 4; ++b) f.table[base + b] = static_cast<uint8_t>((v >> b) & 1);
    }
    return f;
}

std::string format_hex(const BoolFun& f) {
    if (f.m < 2) throw std::invalid_argument("format_hex: need m >= 2");
    size_t digits = f.size() / 4;
    std::string out(digits, '0');
    for (size_t d = 0; d < digits; ++d) {
        size_t base = (digits - 1 - d) * 4;
        int v = 0;
        for (int b = 0; b < 4; ++b) v |= int{f.table[base + b]} << b;
        out[d] = "0123456789abcdef"[v];
    }
    return out;
}

}  // namespace bnt

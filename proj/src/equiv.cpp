#include "bnt/equiv.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "bnt/gf2.hpp"
#include "bnt/normality.hpp"

namespace bnt {

Fingerprint fingerprint(const BoolFun& f) {
    Fingerprint fp;
    fp.degree = degree(f);
    std::map<int32_t, int> hist;
    for (int32_t v : walsh(f).values) ++hist[v < 0 ? -v : v];
    fp.abs_walsh_hist.assign(hist.begin(), hist.end());
    // values 0 and 1 can trade places when an affine function is added
    // (a constant restriction becomes linear), so clamp them together
    for (int r = 1; r <= (f.m + 1) / 2; ++r)
        fp.rdegree_profile.push_back(std::max(r_degree(f, r).value, 1));
    return fp;
}

namespace {

void check_cert(const EACertificate& cert) {
    if (static_cast<int>(cert.rows.size()) != cert.m)
        throw std::invalid_argument("certificate: wrong matrix size");
    if (gf2::rank(cert.rows) != cert.m)
        throw std::invalid_argument("certificate: singular matrix");
}

uint32_t apply_map(const EACertificate& cert, uint32_t x) {
    uint32_t y = cert.b;
    for (int j = 0; j < cert.m; ++j)
        y ^= static_cast<uint32_t>(std::popcount(x & cert.rows[j]) & 1) << j;
    return y;
}

}  // namespace

BoolFun apply_certificate(const BoolFun& f, const EACertificate& cert) {
    check_cert(cert);
    if (cert.m != f.m || cert.affine.m != f.m)
        throw std::invalid_argument("certificate: dimension mismatch");
    BoolFun out(f.m);
    for (size_t x = 0; x < out.size(); ++x)
        out.table[x] = f.table[apply_map(cert, static_cast<uint32_t>(x))] ^
                       cert.affine.table[x];
    return out;
}

bool verify_ea_certificate(const BoolFun& f, const BoolFun& f2, const EACertificate& cert,
                           uint32_t* counterexample) {
    check_cert(cert);
    if (f.m != f2.m || cert.m != f.m || cert.affine.m != f.m)
        throw std::invalid_argument("certificate: dimension mismatch");
    if (degree(cert.affine) > 1) throw std::invalid_argument("certificate: affine part has degree > 1");
    for (size_t x = 0; x < f.size(); ++x) {
        uint8_t lhs = f2.table[x];
        uint8_t rhs = f.table[apply_map(cert, static_cast<uint32_t>(x))] ^ cert.affine.table[x];
        if (lhs != rhs) {
            if (counterexample) *counterexample = static_cast<uint32_t>(x);
            return false;
        }
    }
    return true;
}

EACertificate parse_certificate(const std::string& text, int m) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_certificate: " + why);
    };
    auto hexval = [&](const std::string& w) -> uint32_t {
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
        return v;
    };
    size_t s1 = text.find(';'), s2 = text.find(';', s1 == std::string::npos ? s1 : s1 + 1);
    if (text.rfind("A=", 0) != 0 || s1 == std::string::npos || s2 == std::string::npos)
        fail("expected A=...;b=...;a=...");
    std::string a_part = text.substr(2, s1 - 2);
    std::string b_part = text.substr(s1 + 1, s2 - s1 - 1);
    std::string aff_part = text.substr(s2 + 1);
    if (b_part.rfind("b=", 0) != 0 || aff_part.rfind("a=", 0) != 0) fail("missing b= or a=");
    EACertificate cert;
    cert.m = m;
    size_t pos = 0;
    while (pos <= a_part.size()) {
        size_t comma = a_part.find(',', pos);
        cert.rows.push_back(hexval(a_part.substr(pos, comma == std::string::npos ? comma : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    cert.b = hexval(b_part.substr(2));
    cert.affine = parse_anf(aff_part.substr(2), m);
    check_cert(cert);
    return cert;
}

std::string format_certificate(const EACertificate& cert) {
    auto hex = [](uint32_t v) {
        std::string s;
        do {
            s.insert(s.begin(), "0123456789abcdef"[v & 15]);
            v >>= 4;
        } while (v);
        return s;
    };
    std::string out = "A=";
    for (size_t i = 0; i < cert.rows.size(); ++i) {
        if (i) out += ',';
        out += hex(cert.rows[i]);
    }
    out += ";b=" + hex(cert.b) + ";a=" + format_anf(cert.affine);
    return out;
}

}  // namespace bnt

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnt/boolfun.hpp"

namespace bnt {

// EA-invariant fingerprint: equal fingerprints are necessary (not
// sufficient) for EA-equivalence.
struct Fingerprint {
    int degree = 0;
    std::vector<std::pair<int32_t, int>> abs_walsh_hist;  // (|value|, multiplicity), ascending
    std::vector<int> rdegree_profile;  // max(deg_r(f), 1) for r = 1..ceil(m/2)

    bool operator==(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const BoolFun& f);

// Explicit witness of f2(x) = f(xA + b) + a(x). Row j of `rows` is the
// coefficient mask of component j of the map, i.e. (xA)_j = rows[j].x.
struct EACertificate {
    int m = 0;
    std::vector<uint32_t> rows;
    uint32_t b = 0;
    BoolFun affine;  // degree <= 1 part added after composing
};

// Evaluates the certificate at all 2^m points. Throws on a singular
// matrix. On failure reports the first counterexample point if asked.
bool verify_ea_certificate(const BoolFun& f, const BoolFun& f2, const EACertificate& cert,
                           uint32_t* counterexample = nullptr);

// f(xA + b) + a(x); used to generate EA-equivalent pairs.
BoolFun apply_certificate(const BoolFun& f, const EACertificate& cert);

// "A=<m hex rows>;b=<hex>;a=<ANF string>" with rows comma-separated.
EACertificate parse_certificate(const std::string& text, int m);
std::string format_certificate(const EACertificate& cert);

}  // namespace bnt

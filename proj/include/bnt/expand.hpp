#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnt/boolfun.hpp"

namespace bnt {

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Label strings index the dual-reconstruction tree: the first character
// selects the top half (Phi_0 / Phi_1), each further character descends
// one level. The Walsh block that governs a label lambda is the block of
// g^ whose top coordinates spell lambda with its first character dropped.
// (The restriction convention makes the first character the concat
// selector, which does not constrain g^.)

// Indicator of the Walsh zeros of a near-bent g, plus per-label zero
// counts m_lambda for labels of length 1..3.
struct ZeroIndicator {
    BoolFun zeta;  // on m-1 variables, zeta(w) = 1 iff g^(w) = 0
    std::map<std::string, int> block_zeros;
};
ZeroIndicator zero_indicator(const BoolFun& g);

// g, or g plus its top coordinate function when that shrinks the 00
// block: ensures m_00 <= 2^(m-3). Expansions map back through the same
// linear shift.
BoolFun normalize_prefix(const BoolFun& g);

struct Candidate {
    std::string lambda;
    BoolFun phi;
    std::vector<uint8_t> forced;  // 1 where the value was forced by g^ = +-2^(m/2)
};

struct AdmissibleSet {
    std::string lambda;
    std::vector<Candidate> members;
};

// All lambda-admissible functions: forced positions from the signs of
// g^, free positions enumerated (weight-pruned first), spectrum of both
// phi and phi + zeta_lambda inside W_r. Throws resource_error when the
// free-bit count exceeds budget_bits.
AdmissibleSet admissible_set(const BoolFun& g, const std::string& lambda, int budget_bits = 24);

// Spectral key of an (m-2)-variable function: bitmask over F_2^(m-2),
// bit a set iff Walsh(phi)(a) = 2^(m/2-1) mod 2^(m/2).
uint64_t key_mask(const BoolFun& phi);

// Allowed restriction spectrum W_r for an m-variable bent source.
std::vector<int32_t> restriction_spectrum(int m, int r);

struct ExpandOptions {
    int budget_bits = 24;
    bool verify = true;
};

// All bent expansions f = (g || h) of a near-bent g, via dual
// reconstruction with key-indexed merging. m = g.m + 1 must be 6 or 8.
std::vector<BoolFun> expansion(const BoolFun& g, const ExpandOptions& opts = {});

}  // namespace bnt

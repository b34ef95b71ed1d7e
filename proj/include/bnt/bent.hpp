#pragma once

#include "bnt/spaces.hpp"

namespace bnt {

enum class SpecKind { Bent, NearBent, Other };

struct SpectralClass {
    SpecKind kind;
    int zero_count;  // vanishing Walsh coefficients
};

// Exact spectrum membership. Bent: m even, all values +-2^(m/2).
// NearBent: m odd, value set exactly {0, +-2^((m+1)/2)}. Also validates
// the weight constraints implied by each spectrum.
SpectralClass spectral_class(const BoolFun& f);

bool is_bent(const BoolFun& f);
bool is_near_bent(const BoolFun& f);

// Dual f~ with (-1)^f~(a) = 2^(-m/2) f^(a). Throws std::domain_error if
// f is not bent.
BoolFun dual(const BoolFun& f);

// Zero sets of the two spectra partition the space; equivalent to
// concat(g, h) being bent. Throws if either input is not near-bent.
bool are_complementary(const BoolFun& g, const BoolFun& h);

// Dickson quadratic normal forms.
struct DicksonForm {
    BoolFun fun;
    Subspace witness;       // ceil(m/2)-dimensional, spanned by unit vectors
    bool witness_constant;  // constant there (else linear: the Q_k boundary case)
};
// Q_k = x1x2 + ... + x_{2k-1}x_{2k} + x_{2k+1}, k <= (m-1)/2
DicksonForm dickson_balanced(int m, int k);
// Q_{k,b} = x1x2 + ... + x_{2k-1}x_{2k} + b, k <= m/2
DicksonForm dickson_unbalanced(int m, int k, int b);

}  // namespace bnt

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bnt {

constexpr int kMaxVars = 16;

// Boolean function on F_2^m as a 2^m truth table.
// Index convention throughout: x = sum x_i 2^(i-1).
struct BoolFun {
    int m = 0;
    std::vector<uint8_t> table;  // one byte per bit

    BoolFun() = default;
    explicit BoolFun(int m_) : m(m_), table(size_t{1} << m_, 0) {}
    BoolFun(int m_, std::vector<uint8_t> t) : m(m_), table(std::move(t)) {}

    size_t size() const { return table.size(); }
    uint8_t operator()(size_t x) const { return table[x]; }
    void set(size_t x, uint8_t v) { table[x] = v; }

    bool operator==(const BoolFun& o) const { return m == o.m && table == o.table; }
    bool operator<(const BoolFun& o) const { return table < o.table; }
};

// ANF coefficient vector: bit at index S is the coefficient of X_S.
struct Anf {
    int m = 0;
    std::vector<uint8_t> coeffs;
};

struct WalshSpectrum {
    int m = 0;
    std::vector<int32_t> values;
};

// Binary Moebius (zeta) transform, its own inverse. Converts truth table
// to ANF coefficients and back. Throws std::invalid_argument if the
// length is not a power of two.
void mobius_inplace(std::vector<uint8_t>& bits);

Anf to_anf(const BoolFun& f);
BoolFun from_anf(const Anf& a);

struct FunStats {
    int deg = 0;                // constants have degree 0
    std::optional<int> val;     // absent for the zero function
    int wt = 0;
};
FunStats stats(const BoolFun& f);
int degree(const BoolFun& f);
int weight(const BoolFun& f);

// All 2^m Walsh coefficients via the fast butterfly transform.
WalshSpectrum walsh(const BoolFun& f);

// f = (g || h): lower half g, upper half h (selector x_m).
BoolFun concat(const BoolFun& g, const BoolFun& h);

// Maiorana-McFarland (x,y) -> <x, pi(y)> + g(y) on 2k variables.
// pi given as a table over F_2^k; must be a bijection.
BoolFun mm_construct(const std::vector<uint32_t>& pi, const BoolFun& g);

BoolFun add(const BoolFun& f, const BoolFun& g);
BoolFun constant_fun(int m, uint8_t c);
// x -> mask.x + c
BoolFun linear_fun(int m, uint32_t mask, uint8_t c = 0);

// ANF text: monomials like "x1*x2*x4" joined by " + ", or "0"/"1".
// Canonical order: ascending monomial mask. Throws std::invalid_argument
// with a position on malformed input.
BoolFun parse_anf(std::string_view text, int m);
std::string format_anf(const BoolFun& f);

// Hex: 2^(m-2) digits, the big-endian hexadecimal of the truth-table
// integer sum_x f(x) 2^x (leftmost digit = highest indices). m >= 2.
BoolFun parse_hex(std::string_view text, int m);
std::string format_hex(const BoolFun& f);

}  // namespace bnt

#pragma once

#include <random>

#include "bnt/boolfun.hpp"
#include "bnt/equiv.hpp"
#include "bnt/gf2.hpp"

// Shared test inputs (all given by their ANF) and random generators.
namespace fixtures {

// 5-variable near-bent, weakly normal and normal witness flats below
inline bnt::BoolFun example1_g() {
    return bnt::parse_anf("x1*x4 + x2*x4 + x3*x4 + x2*x3*x4 + x2*x5 + x3*x5 + x1*x3*x5", 5);
}
inline const char* example1_flat_v1() { return "basis=4,8,10;a=13"; }  // e3,e4,e5; (1,1,0,0,1)
inline const char* example1_flat_v2() { return "basis=9,1a,4;a=15"; }  // rows of A_2; (1,0,1,0,1)

// 7-variable quintic with 6-degree 5
inline bnt::BoolFun quintic_h7() {
    return bnt::parse_anf(
        "x1*x2*x3*x4*x5*x6 + x2*x3*x4*x5*x7 + x1*x3*x4*x6*x7 + x1*x2*x5*x6*x7", 7);
}

// 7-variable quartic with 5-degree 3
inline bnt::BoolFun quartic_f7() {
    return bnt::parse_anf(
        "x2*x3*x4*x5 + x1*x2*x3*x6 + x1*x4*x6 + x3*x4*x5*x6 + x2*x3*x7 + x4*x5*x7 + "
        "x3*x4*x5*x7 + x1*x3*x6*x7 + x3*x4*x6*x7 + x1*x5*x6*x7",
        7);
}

// sieving example: Q(f) = {q}
inline bnt::BoolFun sieve_f7() {
    return bnt::parse_anf(
        "x1*x2*x4 + x2*x3*x4 + x2*x3*x5 + x1*x4*x5 + x3*x4*x5 + x2*x3*x4*x5 + x1*x4*x6 + "
        "x2*x3*x5*x6 + x3*x4*x5*x6 + x1*x2*x7 + x1*x3*x6*x7 + x4*x5*x6*x7",
        7);
}
inline bnt::BoolFun sieve_q7() {
    return bnt::parse_anf("x2*x3 + x1*x5 + x2*x5 + x3*x5 + x3*x7 + x5*x7 + x6*x7", 7);
}

// Maiorana-McFarland triple: f quadratic, g cubic, h = g(xA+b) + x6 + 1
inline bnt::BoolFun mm6_f() { return bnt::parse_anf("x1*x4 + x2*x5 + x3*x6", 6); }
inline bnt::BoolFun mm6_g() { return bnt::parse_anf("x1*x4 + x2*x5 + x3*x6 + x1*x2*x3", 6); }
inline bnt::EACertificate mm6_cert() {
    bnt::EACertificate c;
    c.m = 6;
    // components: 1+x2+x4, x1+x2+x4+x6, x2+x4+x6, 1+x1+x2+x5, x1+x2, 1+x2+x3+x5
    c.rows = {0x0a, 0x2b, 0x2a, 0x13, 0x03, 0x16};
    c.b = 0x29;
    c.affine = bnt::parse_anf("1 + x6", 6);
    return c;
}
inline bnt::BoolFun mm6_h() { return bnt::apply_certificate(mm6_g(), mm6_cert()); }

inline bnt::BoolFun random_fun(int m, std::mt19937& rng) {
    bnt::BoolFun f(m);
    for (auto& b : f.table) b = static_cast<uint8_t>(rng() & 1);
    return f;
}

inline std::vector<uint32_t> random_permutation(int k, std::mt19937& rng) {
    std::vector<uint32_t> pi(size_t{1} << k);
    for (size_t i = 0; i < pi.size(); ++i) pi[i] = static_cast<uint32_t>(i);
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

inline bnt::EACertificate random_certificate(int m, std::mt19937& rng) {
    bnt::EACertificate c;
    c.m = m;
    do {
        c.rows.assign(m, 0);
        for (auto& r : c.rows) r = rng() & ((uint32_t{1} << m) - 1);
    } while (bnt::gf2::rank(c.rows) != m);
    c.b = rng() & ((uint32_t{1} << m) - 1);
    c.affine = bnt::linear_fun(m, rng() & ((uint32_t{1} << m) - 1),
                               static_cast<uint8_t>(rng() & 1));
    return c;
}

}  // namespace fixtures

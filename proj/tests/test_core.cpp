#include <random>
#include <stdexcept>

#include "bnt/bent.hpp"
#include "bnt/boolfun.hpp"
#include "bnt/spaces.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bnt;

TEST_CASE("mobius transform basics") {
    std::vector<uint8_t> zero(8, 0);
    mobius_inplace(zero);
    CHECK(zero == std::vector<uint8_t>(8, 0));

    std::vector<uint8_t> one(8, 1);
    mobius_inplace(one);
    std::vector<uint8_t> expect(8, 0);
    expect[0] = 1;
    CHECK(one == expect);

    // f = x3 + x1*x2, truth table bits 0..7
    std::vector<uint8_t> t = {0, 0, 0, 1, 1, 1, 1, 0};
    mobius_inplace(t);
    for (size_t mask = 0; mask < 8; ++mask)
        CHECK(t[mask] == (mask == 3 || mask == 4 ? 1 : 0));

    std::vector<uint8_t> bad(6, 0);
    CHECK_THROWS_AS(mobius_inplace(bad), std::invalid_argument);
}

TEST_CASE("mobius involution on random inputs") {
    std::mt19937 rng(1);
    for (int m = 1; m <= 10; ++m)
        for (int rep = 0; rep < 20; ++rep) {
            BoolFun f = fixtures::random_fun(m, rng);
            auto twice = f.table;
            mobius_inplace(twice);
            mobius_inplace(twice);
            CHECK(twice == f.table);
        }
}

TEST_CASE("degree, valuation, weight") {
    CHECK(degree(fixtures::mm6_g()) == 3);

    FunStats s1 = stats(constant_fun(4, 1));
    CHECK(s1.deg == 0);
    CHECK(s1.val.value() == 0);
    CHECK(s1.wt == 16);

    FunStats s0 = stats(constant_fun(4, 0));
    CHECK(s0.deg == 0);
    CHECK_FALSE(s0.val.has_value());

    FunStats s = stats(parse_anf("x1*x2 + x3*x4", 4));
    CHECK(s.deg == 2);
    CHECK(s.val.value() == 2);
    CHECK(s.wt == 6);
}

TEST_CASE("walsh spectrum small cases") {
    WalshSpectrum w0 = walsh(constant_fun(2, 0));
    CHECK(w0.values == std::vector<int32_t>{4, 0, 0, 0});

    WalshSpectrum w = walsh(parse_anf("x1*x2", 2));
    CHECK(w.values == std::vector<int32_t>{2, 2, 2, -2});
}

TEST_CASE("parseval on random functions") {
    std::mt19937 rng(2);
    for (int m = 2; m <= 8; ++m)
        for (int rep = 0; rep < 50; ++rep) {
            BoolFun f = fixtures::random_fun(m, rng);
            int64_t sum = 0;
            for (int32_t v : walsh(f).values) sum += int64_t{v} * v;
            CHECK(sum == int64_t{1} << (2 * m));
        }
}

TEST_CASE("concat and its spectrum") {
    BoolFun z2 = constant_fun(2, 0);
    CHECK(concat(z2, z2) == constant_fun(3, 0));

    std::mt19937 rng(3);
    for (int rep = 0; rep < 30; ++rep) {
        BoolFun g = fixtures::random_fun(3, rng);
        BoolFun h = fixtures::random_fun(3, rng);
        WalshSpectrum wf = walsh(concat(g, h));
        WalshSpectrum wg = walsh(g), wh = walsh(h);
        for (size_t a = 0; a < wg.values.size(); ++a) {
            CHECK(wf.values[a] == wg.values[a] + wh.values[a]);
            CHECK(wf.values[a + 8] == wg.values[a] - wh.values[a]);
        }
        // (g||g): independent of the top variable
        for (size_t a = 0; a < 8; ++a) CHECK(walsh(concat(g, g)).values[a + 8] == 0);
        // (g||g+1): f = g + x_m
        BoolFun gc = add(g, constant_fun(3, 1));
        for (size_t a = 0; a < 8; ++a) CHECK(walsh(concat(g, gc)).values[a] == 0);
    }

    CHECK_THROWS_AS(concat(z2, constant_fun(3, 0)), std::invalid_argument);
}

TEST_CASE("restriction to flats") {
    BoolFun g = fixtures::example1_g();
    Flat v1 = parse_flat(fixtures::example1_flat_v1(), 5);
    CHECK(format_anf(restrict_to(g, v1)) == "1 + x3");
    Flat v2 = parse_flat(fixtures::example1_flat_v2(), 5);
    CHECK(restrict_to(g, v2) == constant_fun(3, 0));

    // identity flat
    std::mt19937 rng(4);
    BoolFun f = fixtures::random_fun(4, rng);
    Flat full{{4, {1, 2, 4, 8}}, 0};
    CHECK(restrict_to(f, full) == f);

    Flat bad{{4, {1, 2, 3}}, 0};
    CHECK_THROWS_AS(restrict_to(f, bad), std::invalid_argument);
}

TEST_CASE("poisson formula on random data") {
    std::mt19937 rng(5);
    for (int m = 3; m <= 8; ++m)
        for (int rep = 0; rep < 20; ++rep) {
            BoolFun f = fixtures::random_fun(m, rng);
            int r = 1 + int(rng() % m);
            Subspace V;
            do {
                V.m = m;
                V.basis.assign(r, 0);
                for (auto& row : V.basis) row = rng() & ((uint32_t{1} << m) - 1);
            } while (gf2::rank(V.basis) != r);
            uint32_t b = rng() & ((uint32_t{1} << m) - 1);
            uint32_t c = rng() & ((uint32_t{1} << m) - 1);
            auto pts = span_points(V);
            int64_t lhs = 0;
            for (uint32_t v : pts) {
                int s = (f.table[v ^ b] ^ (std::popcount(c & v) & 1)) ? -1 : 1;
                lhs += s;
            }
            auto w = walsh(f);
            auto perp = gf2::kernel(V.basis, m);
            Subspace Vp{m, perp};
            int64_t rhs = 0;
            for (uint32_t a : span_points(Vp)) {
                int s = (std::popcount(b & a) & 1) ? -1 : 1;
                rhs += int64_t{w.values[a ^ c]} * s;
            }
            int bc = std::popcount(b & c) & 1;
            CHECK(lhs * (int64_t{1} << perp.size()) == (bc ? -rhs : rhs));
        }
}

TEST_CASE("anf text round trips") {
    CHECK(format_hex(parse_anf("x1*x2 + x3", 3)) == "78");
    CHECK(parse_anf("0", 2) == constant_fun(2, 0));
    const std::string eq2 = "x1*x4 + x2*x4 + x3*x4 + x2*x3*x4 + x2*x5 + x3*x5 + x1*x3*x5";
    CHECK(format_anf(parse_anf(eq2, 5)) == eq2);
    CHECK(format_anf(constant_fun(3, 0)) == "0");
    CHECK(format_anf(constant_fun(3, 1)) == "1");

    CHECK_THROWS_AS(parse_anf("x9", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_anf("x1 * + x2", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_hex("abc", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_hex("xy", 3), std::invalid_argument);
}

TEST_CASE("hex round trip property") {
    std::mt19937 rng(6);
    for (int m = 2; m <= 9; ++m)
        for (int rep = 0; rep < 20; ++rep) {
            BoolFun f = fixtures::random_fun(m, rng);
            CHECK(parse_hex(format_hex(f), m) == f);
        }
}

TEST_CASE("maiorana-mcfarland construction") {
    std::vector<uint32_t> id4 = {0, 1, 2, 3};
    BoolFun f = mm_construct(id4, constant_fun(2, 0));
    CHECK(f == parse_anf("x1*x3 + x2*x4", 4));
    CHECK(is_bent(f));

    std::vector<uint32_t> id8(8);
    for (uint32_t i = 0; i < 8; ++i) id8[i] = i;
    // g acts on the y half (the high variables)
    BoolFun g6 = mm_construct(id8, parse_anf("x1*x2*x3", 3));
    CHECK(g6 == parse_anf("x1*x4 + x2*x5 + x3*x6 + x4*x5*x6", 6));

    std::mt19937 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        auto pi = fixtures::random_permutation(3, rng);
        CHECK(is_bent(mm_construct(pi, fixtures::random_fun(3, rng))));
    }

    CHECK_THROWS_AS(mm_construct({0, 0, 2, 3}, constant_fun(2, 0)), std::invalid_argument);
}

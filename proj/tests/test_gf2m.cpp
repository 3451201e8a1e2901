#include <doctest.h>

#include <random>

#include "bfc/gf2m.hpp"

using namespace bfc;

TEST_CASE("canonical reduction polynomials are frozen") {
    // lexicographically smallest irreducible with x primitive, per field
    const std::pair<unsigned, std::uint32_t> want[] = {
        {1, 0x3},  {2, 0x7},   {3, 0xb},   {4, 0x13},  {5, 0x25},   {6, 0x43},
        {7, 0x83}, {8, 0x11d}, {9, 0x211}, {10, 0x409}, {11, 0x805}, {12, 0x1053},
    };
    for (auto [m, poly] : want) {
        FieldSpec F(m);
        CHECK(F.reduction_poly() == poly);
        CHECK(gf2_poly_irreducible(m, poly));
    }
    CHECK(FieldSpec(5).name() == "GF(2^5)/0x25");
}

TEST_CASE("multiplication agrees with the table-free oracle") {
    std::mt19937_64 rng(7);
    for (unsigned m : {3u, 5u, 8u, 13u, 21u}) {
        FieldSpec F(m);
        for (int t = 0; t < 300; ++t) {
            elem a = elem(rng() % F.order()), b = elem(rng() % F.order());
            CHECK(F.mul(a, b) == gf2_mul_noref(F.reduction_poly(), a, b));
        }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (unsigned m : {4u, 7u, 12u}) {
        FieldSpec F(m);
        for (int t = 0; t < 200; ++t) {
            elem a = elem(rng() % F.order()), b = elem(rng() % F.order()),
                 c = elem(rng() % F.order());
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.mul(F.sqrt(a), F.sqrt(a)) == a);
        }
    }
}

TEST_CASE("trace mask equals the sum-of-Frobenius definition") {
    for (unsigned m : {3u, 6u, 9u}) {
        FieldSpec F(m);
        for (std::uint64_t a = 0; a < F.order(); ++a) {
            elem s = 0, p = elem(a);
            for (unsigned i = 0; i < m; ++i) {
                s ^= p;
                p = F.sqr(p);
            }
            CHECK((s & 1u) == s); // the Frobenius sum lands in GF(2)
            CHECK(F.trace(elem(a)) == (s & 1u));
        }
        // linearity and Frobenius invariance
        for (std::uint64_t a = 0; a < F.order(); ++a) {
            CHECK(F.trace(F.sqr(elem(a))) == F.trace(elem(a)));
            CHECK(F.trace(elem(a) ^ elem(a / 2)) ==
                  (F.trace(elem(a)) ^ F.trace(elem(a / 2))));
        }
    }
}

TEST_CASE("relative trace lands in the subfield and composes with absolute trace") {
    FieldSpec F(6);
    for (std::uint64_t a = 0; a < F.order(); ++a) {
        elem r2 = F.rel_trace(elem(a), 2);
        CHECK(F.pow(r2, 4) == r2); // fixed by x -> x^{2^2}
        elem r3 = F.rel_trace(elem(a), 3);
        CHECK(F.pow(r3, 8) == r3);
    }
}

TEST_CASE("log/antilog round trip for table-backed fields") {
    for (unsigned m : {4u, 10u}) {
        FieldSpec F(m);
        REQUIRE(F.has_log_tables());
        for (std::uint64_t a = 1; a < F.order(); ++a) CHECK(F.alog(F.log(elem(a))) == a);
        CHECK(F.alog(0) == 1); // x^0
        CHECK(F.alog(1) == 2); // x itself, and x is primitive by construction
    }
}

TEST_CASE("pow handles negative exponents and exponent reduction") {
    FieldSpec F(7);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        elem a = elem(1 + rng() % F.mult_order());
        CHECK(F.pow(a, -1) == F.inv(a));
        CHECK(F.pow(a, F.mult_order()) == 1);
        std::int64_t e = std::int64_t(rng() % 100000);
        CHECK(F.pow(a, e) == F.pow(a, e % F.mult_order()));
    }
    CHECK(F.pow(0, 5) == 0);
    CHECK(F.pow(0, 0) == 1);
}

TEST_CASE("exp_frac inverts denominators mod 2^m-1") {
    FieldSpec F(5);
    std::uint32_t e = F.exp_frac(1, 6);
    CHECK((std::uint64_t(e) * 6) % F.mult_order() == 1);
    CHECK(F.exp_frac(5, 6) == (std::uint64_t(5) * e) % F.mult_order());
    FieldSpec F6(6);
    CHECK_THROWS(F6.exp_frac(1, 3)); // 3 | 2^6-1
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(6, 31) == 26);
    CHECK(mod_inverse(5, 124) == 25);
    CHECK_THROWS(mod_inverse(6, 33));
}

TEST_CASE("gram rows convert the trace pairing to the dot product") {
    std::mt19937_64 rng(23);
    for (unsigned m : {4u, 9u}) {
        FieldSpec F(m);
        for (int t = 0; t < 500; ++t) {
            elem w = elem(rng() % F.order()), x = elem(rng() % F.order());
            std::uint32_t gw = 0;
            for (unsigned i = 0; i < m; ++i)
                if ((w >> i) & 1) gw ^= F.gram_row(i);
            CHECK(F.trace(F.mul(w, x)) == (std::popcount(gw & x) & 1u));
        }
    }
}

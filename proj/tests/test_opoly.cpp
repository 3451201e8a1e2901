#include <doctest.h>

#include <numeric>

#include "bfc/funlib.hpp"
#include "bfc/opoly.hpp"

using namespace bfc;

TEST_CASE("permutation predicate") {
    FieldSpec F(4);
    CHECK(is_permutation(F, [&](elem x) { return F.sqr(x); }));
    CHECK(!is_permutation(F, [&](elem x) { return F.pow(x, 3); }));
}

TEST_CASE("definition mode and 2-to-1 mode agree on every monomial, m=4") {
    FieldSpec F(4);
    for (std::uint64_t d = 1; d < F.mult_order(); ++d) {
        OPolyReport r = is_o_polynomial(
            F, [&, d](elem x) { return F.pow(x, std::int64_t(d)); }, OPolyMode::Both);
        REQUIRE(r.definition_test.has_value());
        REQUIRE(r.two_to_one_test.has_value());
        CHECK(*r.definition_test == *r.two_to_one_test);
        CHECK(r.verdict == *r.definition_test);
    }
}

TEST_CASE("translation monomials are o-polynomials exactly when gcd(h,m)=1") {
    for (unsigned m : {4u, 5u, 6u}) {
        FieldSpec F(m);
        for (std::uint64_t h = 1; h < m; ++h) {
            bool want = std::gcd(h, std::uint64_t(m)) == 1;
            OPolyReport r = is_o_polynomial(
                F, [&, h](elem x) { return F.pow(x, std::int64_t(1) << h); });
            CHECK(r.verdict == want);
        }
    }
}

TEST_CASE("x^3 is APN but not an o-polynomial; witness captured") {
    FieldSpec F(5);
    OPolyReport r = is_o_polynomial(F, [&](elem x) { return F.pow(x, 3); }, OPolyMode::Both);
    CHECK(!r.verdict);
    CHECK(r.is_permutation); // gcd(3, 31) = 1, so it is a permutation
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->colliding.size() >= 2);
}

TEST_CASE("known o-polynomial families at m=5") {
    FieldSpec F(5);
    for (const char* fam : {"segre:a=1", "glynn1", "glynn2:a=1", "payne:a=1",
                            "cherowitzo:a=1", "subiaco:a=1"}) {
        OPolyReport r = is_o_polynomial(F, instantiate(F, FamilyId::parse(fam)),
                                        OPolyMode::Both, fam);
        CHECK_MESSAGE(r.verdict, fam);
        CHECK(r.family == fam);
    }
}

TEST_CASE("closure transforms preserve the o-polynomial property") {
    FieldSpec F(5);
    auto seg = instantiate(F, FamilyId::parse("segre:a=1"));
    ClosureTransforms ct = closure_transforms(F, seg);
    CHECK(is_o_polynomial(F, ct.inverse).verdict);
    CHECK(is_o_polynomial(F, ct.fbar).verdict);
    CHECK(is_o_polynomial(F, ct.unit_shift).verdict);
    CHECK(is_o_polynomial(F, frobenius_twist(F, seg, 1)).verdict);

    // inverse really is the compositional inverse
    auto t2 = instantiate(F, FamilyId::parse("trans:h=2"));
    elem_fn t2inv = closure_transforms(F, t2).inverse;
    auto t3 = instantiate(F, FamilyId::parse("trans:h=3"));
    for (std::uint64_t x = 0; x < F.order(); ++x) CHECK(t2inv(elem(x)) == t3(elem(x)));

    // inverse of a non-permutation is poisoned, not silently wrong
    ClosureTransforms bad = closure_transforms(F, [](elem) { return elem(1); });
    CHECK_THROWS_AS((void)bad.inverse(1), std::domain_error);
}

TEST_CASE("exponent orbit of an o-monomial stays o-monomial") {
    FieldSpec F(5);
    for (std::int64_t k : {2, 6}) {
        auto orbit = exponent_orbit(F, k);
        CHECK(orbit.size() == 5);
        for (const OrbitEntry& en : orbit) {
            REQUIRE(en.exponent.has_value()); // all denominators invertible mod 31
            std::uint32_t e = *en.exponent;
            CHECK(is_o_polynomial(F, [&, e](elem x) { return F.pow(x, e); }).verdict);
        }
    }
    // 1/6 mod 31 = 26
    auto o6 = exponent_orbit(F, 6);
    CHECK(o6[0].label == "1/k");
    CHECK(*o6[0].exponent == 26);
}

#include <doctest.h>

#include <random>

#include "bfc/boolfun.hpp"
#include "bfc/funlib.hpp"

using namespace bfc;

namespace {

TruthTable random_tt(const FieldSpec& F, std::mt19937_64& rng) {
    std::vector<std::uint64_t> words((F.order() + 63) / 64);
    for (auto& w : words) w = rng();
    if (F.m() < 6) words[0] &= (std::uint64_t(1) << F.order()) - 1;
    return TruthTable(F.m(), words);
}

unsigned bent_eval(const FieldSpec& F, elem x) {
    unsigned k = F.m() / 2;
    elem y = F.pow(x, (std::int64_t(1) << k) + 1);
    elem acc = 0;
    for (unsigned i = 0; i < k; ++i) {
        acc ^= y;
        y = F.sqr(y);
    }
    return acc & 1u;
}

} // namespace

TEST_CASE("fast transform equals the direct summation oracle, exhaustive m=3") {
    FieldSpec F(3);
    for (std::uint64_t word = 0; word < 256; ++word) {
        TruthTable tt(3, {word});
        WalshSpectrum fast = walsh_transform(F, tt);
        WalshSpectrum slow = walsh_transform_direct(F, tt);
        REQUIRE(fast.values == slow.values);
        CHECK(fast.summary == slow.summary);
    }
}

TEST_CASE("fast transform equals the oracle on random functions up to m=10") {
    std::mt19937_64 rng(101);
    for (unsigned m = 4; m <= 10; ++m) {
        FieldSpec F(m);
        for (int t = 0; t < 5; ++t) {
            TruthTable tt = random_tt(F, rng);
            CHECK(walsh_transform(F, tt).values == walsh_transform_direct(F, tt).values);
        }
    }
}

TEST_CASE("Parseval and the signed sum hold on random spectra") {
    std::mt19937_64 rng(5);
    for (unsigned m : {4u, 7u, 11u}) {
        FieldSpec F(m);
        for (int t = 0; t < 10; ++t) {
            TruthTable tt = random_tt(F, rng);
            WalshSpectrum ws = walsh_transform(F, tt);
            std::int64_t sum = 0, sq = 0;
            for (std::int32_t v : ws.values) {
                sum += v;
                sq += std::int64_t(v) * v;
            }
            CHECK(sq == (std::int64_t(1) << (2 * m)));
            CHECK(sum == (tt(0) ? -1 : 1) * (std::int64_t(1) << m));
        }
    }
}

TEST_CASE("pinned spectra") {
    FieldSpec F(5);
    TruthTable cube = TruthTable::from_trace_of(F, [&](elem x) { return F.pow(x, 3); });
    CHECK(cube.support_size() == 16);
    WalshSpectrum ws = walsh_transform(F, cube);
    std::map<std::int32_t, std::uint64_t> want{{0, 16}, {8, 10}, {-8, 6}};
    CHECK(ws.summary == want);
    CHECK(classify(ws, 5).tag == SpectrumTag::Semibent);

    TruthTable zero = TruthTable::from_evaluator(F, [](elem) { return 0u; });
    WalshSpectrum wz = walsh_transform(F, zero);
    CHECK(wz.at(0) == 32);
    CHECK(classify(wz, 5).tag == SpectrumTag::Other);

    TruthTable lin = TruthTable::from_evaluator(F, [&](elem x) { return F.trace(F.mul(3, x)); });
    WalshSpectrum wl = walsh_transform(F, lin);
    CHECK(wl.at(3) == 32);
    for (elem w = 0; w < 32; ++w)
        if (w != 3) CHECK(wl.at(w) == 0);
}

TEST_CASE("trace of the norm onto the half field is bent for even m") {
    for (unsigned m : {4u, 6u, 8u}) {
        FieldSpec F(m);
        TruthTable tt = TruthTable::from_evaluator(F, [&](elem x) { return bent_eval(F, x); });
        CHECK(classify(walsh_transform(F, tt), m).tag == SpectrumTag::Bent);
    }
}

TEST_CASE("quadratic rank: pinned and cross-checked against the spectrum") {
    FieldSpec F5(5);
    TruthTable cube = TruthTable::from_trace_of(F5, [&](elem x) { return F5.pow(x, 3); });
    CHECK(quad_rank(F5, cube) == 4);
    TruthTable aff = TruthTable::from_evaluator(F5, [&](elem x) { return F5.trace(x); });
    CHECK(quad_rank(F5, aff) == 0);

    FieldSpec F6(6);
    TruthTable t9 = TruthTable::from_trace_of(F6, [&](elem x) { return F6.pow(x, 9); });
    unsigned r = quad_rank(F6, t9);
    WalshSpectrum ws = walsh_transform(F6, t9);
    std::int32_t mag = std::int32_t(1) << (6 - r / 2);
    for (std::int32_t v : ws.values) CHECK((v == 0 || v == mag || v == -mag));

    // degree-3 function: the bilinearity check must reject it
    TruthTable cubic = TruthTable::from_trace_of(F5, [&](elem x) { return F5.pow(x, 7); });
    CHECK_THROWS_AS((void)quad_rank(F5, cubic), std::invalid_argument);
}

TEST_CASE("three- and four-valued summaries are internally consistent") {
    for (unsigned m : {6u, 8u}) {
        for (unsigned e : {2u, 4u}) {
            auto s = three_valued_summary(m, e);
            std::uint64_t total = 0;
            std::int64_t sq = 0;
            for (auto& [v, c] : s) {
                total += c;
                sq += std::int64_t(v) * v * std::int64_t(c);
            }
            CHECK(total == (std::uint64_t(1) << m));
            CHECK(sq == (std::int64_t(1) << (2 * m)));
        }
        // cases 1 and 2 require m = 0 mod 4, case 3 requires m = 2 mod 4
        for (unsigned which : {1u, 2u, 3u}) {
            if ((which == 3) != (m % 4 == 2)) continue;
            auto s = four_valued_summary(m, which);
            std::uint64_t total = 0;
            for (auto& [v, c] : s) total += c;
            CHECK(total == (std::uint64_t(1) << m));
        }
        CHECK_THROWS_AS((void)four_valued_summary(m, m % 4 == 0 ? 3 : 1),
                        std::invalid_argument);
    }
}

TEST_CASE("AB and APN predicates on catalog monomials") {
    FieldSpec F(5);
    auto gold = [&](elem x) { return F.pow(x, 3); };
    CHECK(is_almost_bent(F, gold));
    CHECK(is_apn(F, gold));
    auto kasami = [&](elem x) { return F.pow(x, 13); }; // 2^{2h}-2^h+1, h=2
    CHECK(is_almost_bent(F, kasami));
    auto linear = [&](elem x) { return F.mul(5, x); };
    CHECK(!is_apn(F, linear));
    CHECK(!is_almost_bent(F, linear)); // spectrum hits 2^m, outside {0, +-2^{(m+1)/2}}
    CHECK(is_almost_bent(F, [&](elem x) { return F.pow(x, 5); })); // x^5 = gold h=2
}

TEST_CASE("vectorial walsh literal values") {
    FieldSpec F(4);
    auto g = [&](elem x) { return F.pow(x, 3); };
    // a = 0 reduces to the pure linear-character sum
    CHECK(vectorial_walsh(F, g, 0, 0) == 16);
    CHECK(vectorial_walsh(F, g, 0, 1) == 0);
    std::vector<elem> tab = tabulate(F, g);
    REQUIRE(tab.size() == 16);
    CHECK(tab[2] == F.pow(2, 3));
}

#include <doctest.h>

#include <random>

#include "bfc/codes.hpp"
#include "bfc/funlib.hpp"

using namespace bfc;

namespace {

TruthTable tt_from_word(unsigned m, std::uint64_t word) { return TruthTable(m, {word}); }

} // namespace

TEST_CASE("walsh route equals direct route, exhaustive m=3") {
    FieldSpec F(3);
    CodeEngine eng(F);
    for (std::uint64_t word = 1; word < 256; ++word) {
        TruthTable tt = tt_from_word(3, word);
        CodeSummary a = eng.weight_dist_via_walsh(tt);
        CodeSummary b = eng.code_from_defining_set(DefiningSet(3, tt.support()));
        CHECK(a == b);
    }
}

TEST_CASE("walsh route equals direct route on random supports, m up to 12") {
    std::mt19937_64 rng(31);
    for (unsigned m : {5u, 8u, 12u}) {
        FieldSpec F(m);
        CodeEngine eng(F);
        for (int t = 0; t < 6; ++t) {
            std::vector<std::uint64_t> words((F.order() + 63) / 64);
            for (auto& w : words) w = rng();
            TruthTable tt(m, words);
            CHECK(eng.weight_dist_via_walsh(tt) ==
                  eng.code_from_defining_set(DefiningSet(m, tt.support())));
        }
    }
}

TEST_CASE("pinned code: support of Tr(x^3) at m=5") {
    FieldSpec F(5);
    TruthTable tt = TruthTable::from_trace_of(F, [&](elem x) { return F.pow(x, 3); });
    CodeSummary cs = code_from_defining_set(F, DefiningSet(5, tt.support()));
    CHECK(cs.n == 16);
    CHECK(cs.k == 5);
    CHECK(cs.d_min == 6);
    CHECK(cs.zero_mult == 1);
    std::map<std::uint64_t, std::uint64_t> want{{0, 1}, {6, 6}, {8, 15}, {10, 10}};
    CHECK(cs.weight_distribution == want);
    CHECK(cs.distinct_nonzero_weights() == 3);
    CHECK(cs.codeword_count() == 32);
}

TEST_CASE("folding: hyperplane support gives dimension m-1") {
    FieldSpec F(6);
    TruthTable tt = TruthTable::from_evaluator(F, [&](elem x) { return 1u ^ F.trace(x); });
    CodeSummary cs = weight_dist_via_walsh(F, tt);
    CHECK(cs.zero_mult == 2);
    CHECK(cs.k == 5);
    CHECK(cs.codeword_count() == 32);
}

TEST_CASE("expected table generators are exact and sum to 2^k") {
    ExpectedTable bent = expected_bent_code(4, 6);
    std::map<std::uint64_t, std::uint64_t> want{{0, 1}, {2, 6}, {4, 9}};
    CHECK(bent.rows == want);
    ExpectedTable semi = expected_semibent_code(5, 16);
    std::map<std::uint64_t, std::uint64_t> wsemi{{0, 1}, {6, 6}, {8, 15}, {10, 10}};
    CHECK(semi.rows == wsemi);
    ExpectedTable hyp = expected_hyperoval_code(5);
    std::map<std::uint64_t, std::uint64_t> whyp{{0, 1}, {6, 10}, {8, 15}, {10, 6}};
    CHECK(hyp.rows == whyp);
    for (unsigned m : {6u, 8u}) {
        // four-weight cases 1 and 2 need m = 0 mod 4; case 3 needs m = 2 mod 4
        std::vector<ExpectedTable> tabs{expected_three_weight_code(m, 2)};
        if (m % 4 == 0) {
            tabs.push_back(expected_four_weight_code(m, 1));
            tabs.push_back(expected_four_weight_code(m, 2));
        } else {
            tabs.push_back(expected_four_weight_code(m, 3));
        }
        for (const auto& tab : tabs) {
            std::uint64_t total = 0;
            for (auto& [w, a] : tab.rows) total += a;
            CHECK(total == (std::uint64_t(1) << m));
        }
    }
    CHECK_THROWS_AS((void)expected_four_weight_code(6, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)expected_bent_code(5, 16), std::invalid_argument); // odd m
    CHECK_THROWS_AS((void)expected_four_weight_code(8, 4), std::invalid_argument);
}

TEST_CASE("matches() compares rows exactly") {
    FieldSpec F(5);
    TruthTable tt = TruthTable::from_trace_of(F, [&](elem x) { return F.pow(x, 3); });
    CodeSummary cs = weight_dist_via_walsh(F, tt);
    CHECK(matches(cs, expected_semibent_code(5, 16)));
    CHECK(!matches(cs, expected_hyperoval_code(5)));
}

TEST_CASE("wdx code is [49, 6] with the pinned distribution") {
    FieldSpec F(6);
    CodeSummary cs = code_from_defining_set(F, wdx_defining_set(F, 3, 2));
    CHECK(cs.n == 49);
    CHECK(cs.k == 6);
    std::map<std::uint64_t, std::uint64_t> want{{0, 1}, {24, 49}, {28, 14}};
    CHECK(cs.weight_distribution == want);
    CHECK(matches(cs, expected_wdx_code(3, 2)));
}

TEST_CASE("complement expansion, pinned at m=5") {
    FieldSpec F(5);
    TruthTable tt = TruthTable::from_trace_of(F, [&](elem x) { return F.pow(x, 3); });
    CodeSummary ext = expand_complement(weight_dist_via_walsh(F, tt));
    CHECK(ext.n == 16);
    CHECK(ext.k == 6);
    CHECK(ext.d_min == 6);
    std::map<std::uint64_t, std::uint64_t> want{{0, 1}, {6, 16}, {8, 30}, {10, 16}, {16, 1}};
    CHECK(ext.weight_distribution == want);
    CHECK(matches(ext, expected_extended_hyperoval_code(5)));
}

TEST_CASE("dual distance probe") {
    CHECK(dual_distance_probe(DefiningSet(4, {0, 1, 2}), 4) == 1);
    CHECK(dual_distance_probe(DefiningSet(4, {1, 2, 3}), 4) == 3); // 1^2^3 = 0
    CHECK(dual_distance_probe(DefiningSet(4, {1, 2, 4}), 4) == 0); // independent
    // every 4-subset of {1,2,4,8,15} xors to the fifth element, so no 4-dependency
    CHECK(dual_distance_probe(DefiningSet(4, {1, 2, 4, 8, 15}), 4) == 0);
    CHECK(dual_distance_probe(DefiningSet(4, {1, 2, 4, 7}), 4) == 4); // 1^2^4^7 = 0
}

TEST_CASE("relative difference set weight menu") {
    auto ws = relative_difference_set_weights(16, 8, 2);
    // (16 +- 4)/2 and (16 +- 0)/2
    CHECK(std::find(ws.begin(), ws.end(), 10) != ws.end());
    CHECK(std::find(ws.begin(), ws.end(), 6) != ws.end());
    CHECK(std::find(ws.begin(), ws.end(), 8) != ws.end());
}

TEST_CASE("quadratic table reading covers all three epsilon branches") {
    FieldSpec F(6);
    // rank-6 bent-like quadratic: fhat(0) = +8
    TruthTable q = TruthTable::from_trace_of(F, [&](elem x) { return F.pow(x, 3); });
    unsigned r = quad_rank(F, q);
    WalshSpectrum ws = walsh_transform(F, q);
    CodeSummary cs = weight_dist_via_walsh(F, q);
    CHECK(matches(cs, expected_quadratic_code(6, r, ws.at(0))));
}

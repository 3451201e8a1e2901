#include <doctest.h>

#include <random>

#include "bfc/codes.hpp"
#include "bfc/diffsets.hpp"
#include "bfc/funlib.hpp"

using namespace bfc;

namespace {

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

TEST_CASE("difference function sums to |D|^2 - |D| over nonzero shifts") {
    std::mt19937_64 rng(41);
    FieldSpec F(6);
    for (int t = 0; t < 10; ++t) {
        std::vector<elem> elems;
        for (std::uint64_t x = 0; x < F.order(); ++x)
            if (rng() & 1) elems.push_back(elem(x));
        DefiningSet D(6, elems);
        std::uint64_t total = 0;
        for (std::uint64_t x = 1; x < F.order(); ++x) total += difference_function(D, elem(x));
        CHECK(total == std::uint64_t(D.size()) * D.size() - D.size());
    }
}

TEST_CASE("bent support is a Menon additive difference set; non-bent is not") {
    FieldSpec F(4);
    TruthTable bent = TruthTable::from_evaluator(F, [&](elem x) { return bent_eval(F, x); });
    DiffSetReport r = is_additive_difference_set(F, DefiningSet(4, bent.support()));
    CHECK(r.verdict);
    CHECK(r.group_name() == "additive");
    REQUIRE(r.lambda.has_value());
    // this bent function takes the complement orientation at m=4:
    // n_f = 2^{m-1} + 2^{(m-2)/2} = 10, lambda = 2^{m-2} + 2^{(m-2)/2} = 6
    CHECK(r.k == 10);
    CHECK(*r.lambda == 6);

    TruthTable lin = TruthTable::from_evaluator(F, [&](elem x) { return F.trace(x); });
    DiffSetReport bad = is_additive_difference_set(F, DefiningSet(4, lin.support()));
    CHECK(!bad.verdict);
    CHECK(bad.counterexample.has_value());
}

TEST_CASE("bent iff Menon difference set, exhaustive m=4") {
    FieldSpec F(4);
    unsigned bent_count = 0;
    for (std::uint64_t word = 0; word < 65536; ++word) {
        TruthTable tt(4, {word});
        bool is_bent = classify(walsh_transform(F, tt), 4).tag == SpectrumTag::Bent;
        DiffSetReport r = is_additive_difference_set(F, DefiningSet(4, tt.support()));
        bool menon = r.verdict && (r.k == 6 || r.k == 10) &&
                     r.lambda == (r.k == 6 ? 2u : 6u);
        REQUIRE(is_bent == menon);
        bent_count += is_bent;
    }
    CHECK(bent_count == 896); // the classical count of bent functions on 4 variables
}

TEST_CASE("Tr = 1 set is a multiplicative Singer difference set") {
    FieldSpec F(5);
    std::vector<elem> elems;
    for (std::uint64_t x = 1; x < F.order(); ++x)
        if (F.trace(elem(x))) elems.push_back(elem(x));
    DiffSetReport r = is_multiplicative_difference_set(F, DefiningSet(5, elems));
    CHECK(r.verdict);
    CHECK(r.v == 31);
    CHECK(r.k == 16);
    CHECK(r.lambda == 8u);
    CHECK_THROWS_AS((void)is_multiplicative_difference_set(F, DefiningSet(5, {0, 1})),
                    std::invalid_argument);
}

TEST_CASE("multiplicative counterexample capture") {
    FieldSpec F(4);
    DiffSetReport r = is_multiplicative_difference_set(F, DefiningSet(4, {1, 2, 3}));
    CHECK(!r.verdict);
    CHECK(r.counterexample.has_value());
}

TEST_CASE("bent graph is a relative difference set with forbidden subgroup {0,1}") {
    FieldSpec F(5), H(4);
    std::vector<elem> elems;
    for (std::uint64_t x = 0; x < H.order(); ++x)
        elems.push_back(elem((x << 1) | bent_eval(H, elem(x))));
    DefiningSet D(5, elems), N(5, {0, 1});
    DiffSetReport r = is_relative_difference_set(F, D, N);
    CHECK(r.verdict);
    CHECK(r.character_check);
    CHECK(r.k == 16);
    CHECK(r.ell == 2u);
    CHECK(r.lambda == 8u); // 16*15 differences spread over 30 non-subgroup shifts
}

TEST_CASE("relative difference set input validation") {
    FieldSpec F(4);
    DefiningSet D(4, {2, 3, 4});
    CHECK_THROWS_AS((void)is_relative_difference_set(F, D, DefiningSet(4, {1, 2})),
                    std::invalid_argument); // N missing 0
    CHECK_THROWS_AS((void)is_relative_difference_set(F, D, DefiningSet(4, {0, 1, 2})),
                    std::invalid_argument); // N not a subgroup
}

TEST_CASE("non-relative difference set detected") {
    FieldSpec F(4);
    DiffSetReport r = is_relative_difference_set(F, DefiningSet(4, {2, 3, 4, 5}),
                                                 DefiningSet(4, {0, 1}));
    CHECK(!r.verdict);
}

// Acceptance gate: one pass/fail line per criterion, exit = failure count.
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bfc/codes.hpp"
#include "bfc/diffsets.hpp"
#include "bfc/funlib.hpp"
#include "bfc/opoly.hpp"
#include "bfc/verify.hpp"

using namespace bfc;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
    if (!ok) ++failures;
}

TruthTable random_tt(const FieldSpec& F, std::mt19937_64& rng) {
    std::vector<std::uint64_t> words((F.order() + 63) / 64);
    for (auto& w : words) w = rng();
    if (F.m() < 6) words[0] &= (std::uint64_t(1) << F.order()) - 1;
    return TruthTable(F.m(), words);
}

TruthTable random_quadratic(const FieldSpec& F, std::mt19937_64& rng) {
    unsigned m = F.m();
    std::vector<std::uint32_t> coef(m);
    for (auto& c : coef) c = std::uint32_t(rng());
    std::uint32_t lin = std::uint32_t(rng());
    return TruthTable::from_evaluator(F, [=](elem x) {
        unsigned acc = std::popcount(lin & x);
        for (unsigned i = 0; i < m; ++i)
            if ((x >> i) & 1) acc += std::popcount(coef[i] & x & ~((2u << i) - 1));
        return acc & 1u;
    });
}

DefiningSet shifted_image(const FieldSpec& F, const elem_fn& f, elem u) {
    return image_set(F, [&](elem x) { return F.add(f(x), F.mul(u, x)); });
}

std::vector<elem> sample_units(const FieldSpec& F, std::mt19937_64& rng, unsigned count) {
    std::vector<elem> us;
    while (us.size() < count) {
        elem u = elem(1 + rng() % (F.order() - 1));
        if (std::find(us.begin(), us.end(), u) == us.end()) us.push_back(u);
    }
    return us;
}

void criterion1() {
    bool ok = true;
    FieldSpec F4(4);
    CodeEngine eng4(F4);
    for (std::uint64_t word = 1; word < 65536 && ok; ++word) {
        TruthTable tt(4, {word});
        ok = eng4.weight_dist_via_walsh(tt) ==
             eng4.code_from_defining_set(DefiningSet(4, tt.support()));
    }
    std::mt19937_64 rng(1);
    for (unsigned m : {6u, 8u, 10u, 12u}) {
        FieldSpec F(m);
        CodeEngine eng(F);
        for (int t = 0; t < 1000 && ok; ++t) {
            TruthTable tt = random_tt(F, rng);
            ok = eng.weight_dist_via_walsh(tt) ==
                 eng.code_from_defining_set(DefiningSet(m, tt.support()));
        }
    }
    line(1, ok, "dual-path oracle equivalence: exhaustive m=4 plus 1000 random per m in {6,8,10,12}");
}

void criterion2() {
    bool ok = true;
    for (unsigned m : {4u, 6u}) {
        FieldSpec F(m);
        CodeEngine eng(F);
        unsigned bent_hits = 0;
        for (elem a = 1; a < F.order() && ok; ++a) {
            TruthTable tt = TruthTable::from_trace_of(
                F, [&](elem x) { return F.mul(a, F.pow(x, 3)); });
            bool is_bent = classify(walsh_transform(F, tt), m).tag == SpectrumTag::Bent;
            bool table_match = false;
            try {
                table_match = matches(eng.weight_dist_via_walsh(tt),
                                      expected_bent_code(m, tt.support_size()));
            } catch (const std::invalid_argument&) {
                table_match = false; // n_f not of bent shape: comparison fails
            }
            ok = (is_bent == table_match);
            bent_hits += is_bent;
        }
        ok = ok && bent_hits > 0;
    }
    line(2, ok, "bent iff fixed two-weight table, sweep of Tr(a x^3) at m in {4,6}");
}

void criterion3() {
    bool ok = true;
    for (unsigned m : {5u, 7u, 9u}) {
        FieldSpec F(m);
        TruthTable tt = TruthTable::from_trace_of(F, [&](elem x) { return F.pow(x, 3); });
        CodeSummary cs = weight_dist_via_walsh(F, tt);
        ok = ok && cs.n == (std::uint64_t(1) << (m - 1)) && cs.k == m &&
             cs.d_min == (std::uint64_t(1) << (m - 2)) - (std::uint64_t(1) << ((m - 3) / 2)) &&
             matches(cs, expected_semibent_code(m, cs.n));
        if (m == 5) {
            std::map<std::uint64_t, std::uint64_t> want{{0, 1}, {6, 6}, {8, 15}, {10, 10}};
            ok = ok && cs.weight_distribution == want;
        }
    }
    line(3, ok, "semibent support codes of Tr(x^3) at m in {5,7,9}, pinned rows at m=5");
}

void criterion4() {
    bool ok = true;
    for (unsigned m : {5u, 7u}) {
        FieldSpec F(m);
        CodeEngine eng(F);
        for (const char* fam : {"gold:h=1", "kasami:h=2", "welch"}) {
            FamilyId id = FamilyId::parse(fam);
            ok = ok && is_almost_bent(F, instantiate(F, id));
            CodeSummary cs = eng.weight_dist_via_walsh(instantiate_bool(F, id));
            // balanced orientation of the three-weight table (0 not in the support)
            ok = ok && cs.n == (std::uint64_t(1) << (m - 1)) &&
                 matches(cs, expected_semibent_code(m, cs.n));
        }
    }
    line(4, ok, "AB monomials (Gold, Kasami, Welch) at m in {5,7}: almost bent plus the "
                "three-weight table in its balanced orientation");
}

void criterion5() {
    bool ok = true;
    std::mt19937_64 rng(5);
    for (unsigned m : {6u, 8u, 10u}) {
        FieldSpec F(m);
        CodeEngine eng(F);
        int used = 0;
        while (used < 200 && ok) {
            TruthTable tt = random_quadratic(F, rng);
            unsigned r;
            try {
                r = quad_rank(F, tt);
            } catch (const std::invalid_argument&) {
                continue;
            }
            if (r <= 2) continue;
            ++used;
            WalshSpectrum ws = walsh_transform(F, tt);
            ok = matches(eng.weight_dist_via_walsh(tt), expected_quadratic_code(m, r, ws.at(0)));
        }
    }
    line(5, ok, "200 random quadratic forms per m in {6,8,10} with rank > 2 match the "
                "rank-indexed table");
}

void criterion6() {
    bool ok = true;
    auto check_both = [&](const FieldSpec& F, const std::string& fam) {
        OPolyReport r = is_o_polynomial(F, instantiate(F, FamilyId::parse(fam)),
                                        OPolyMode::Both, fam);
        ok = ok && r.verdict && r.definition_test && r.two_to_one_test &&
             *r.definition_test == *r.two_to_one_test;
    };
    for (unsigned m : {3u, 5u, 7u}) {
        FieldSpec F(m);
        for (std::uint64_t h = 1; h < m; ++h)
            if (std::gcd(h, std::uint64_t(m)) == 1)
                check_both(F, "trans:h=" + std::to_string(h));
        check_both(F, "glynn1");
        check_both(F, "subiaco:a=1");
        for (elem a = 0; a < F.order() && ok; ++a) {
            std::string as = ":a=" + std::to_string(a);
            check_both(F, "segre" + as);
            check_both(F, "glynn2" + as);
            check_both(F, "payne" + as);
            check_both(F, "cherowitzo" + as);
        }
    }
    for (unsigned m : {4u, 6u, 8u}) {
        FieldSpec F(m);
        for (std::uint64_t h = 1; h < m; ++h)
            if (std::gcd(h, std::uint64_t(m)) == 1)
                check_both(F, "trans:h=" + std::to_string(h));
    }
    line(6, ok, "o-polynomial families pass both test modes with agreeing verdicts at "
                "m in {3,5,7} (plus translation at {4,6,8})");
}

void criterion7() {
    bool ok = true;
    std::mt19937_64 rng(7);
    for (unsigned m = 4; m <= 10; ++m) {
        FieldSpec F(m);
        CodeEngine eng(F);
        for (std::uint64_t h = 1; h < m; ++h) {
            if (std::gcd(h, std::uint64_t(m)) != 1) continue;
            auto f = instantiate(F, FamilyId{"trans", {{"h", h}}, ""});
            for (elem u : sample_units(F, rng, 5)) {
                CodeSummary cs = eng.code_from_defining_set(shifted_image(F, f, u));
                ok = ok && cs.n == (std::uint64_t(1) << (m - 1)) && cs.k == m - 1 &&
                     cs.d_min == (std::uint64_t(1) << (m - 2)) &&
                     cs.distinct_nonzero_weights() == 1;
            }
        }
    }
    line(7, ok, "translation-monomial image codes are one-weight [2^{m-1}, m-1, 2^{m-2}] "
                "for m in 4..10");
}

void criterion8() {
    bool ok = true;
    std::mt19937_64 rng(8);
    for (unsigned m : {5u, 7u}) {
        FieldSpec F(m);
        CodeEngine eng(F);
        ExpectedTable tab = expected_hyperoval_code(m);
        std::vector<elem_fn> fns;
        fns.push_back([&F](elem x) { return F.pow(x, 6); }); // rho = 6
        std::uint32_t inv6 = F.exp_frac(1, 6);
        fns.push_back([&F, inv6](elem x) { return F.pow(x, inv6); });
        for (elem a = 0; a < F.order(); ++a)
            fns.push_back(instantiate(F, FamilyId{"xd5", {{"a", a}}, ""}));
        for (const elem_fn& f : fns) {
            for (elem u : sample_units(F, rng, 10)) {
                CodeSummary cs = eng.code_from_defining_set(shifted_image(F, f, u));
                ok = ok && cs.k == m && matches(cs, tab);
                if (m == 5) {
                    std::map<std::uint64_t, std::uint64_t> want{
                        {0, 1}, {6, 10}, {8, 15}, {10, 6}};
                    ok = ok && cs.weight_distribution == want;
                }
            }
        }
    }
    line(8, ok, "hyperoval image codes (x^6, x^{1/6}, x*D5(x,a) for all a) match the fixed "
                "three-weight table at m in {5,7}");
}

void criterion9() {
    FieldSpec F(6);
    CodeSummary cs = code_from_defining_set(F, wdx_defining_set(F, 3, 2));
    std::map<std::uint64_t, std::uint64_t> want{{0, 1}, {24, 49}, {28, 14}};
    line(9, cs.n == 49 && cs.k == 6 && cs.weight_distribution == want,
         "cyclotomic construction at (r=3, inner 2) gives [49,6] with A_24=49, A_28=14");
}

void criterion10() {
    bool ok = true;
    for (unsigned m : {5u, 7u}) {
        FieldSpec F(m);
        TruthTable tt = TruthTable::from_trace_of(F, [&](elem x) { return F.pow(x, 3); });
        CodeSummary ext = expand_complement(weight_dist_via_walsh(F, tt));
        ok = ok && ext.n == (std::uint64_t(1) << (m - 1)) && ext.k == m + 1 &&
             ext.d_min == (m == 5 ? 6u : 28u) &&
             matches(ext, expected_extended_hyperoval_code(m));
    }
    line(10, ok, "complement expansion gives [16,6,6] at m=5 and [64,8,28] at m=7");
}

void criterion11() {
    bool ok = true;
    std::vector<std::string> details;
    auto run = [&](const std::string& id, unsigned m) {
        VerificationReport r = run_claim(id, m);
        if (r.verdict != Verdict::Match) {
            ok = false;
            details.push_back(id + " m=" + std::to_string(m) + " -> " + to_string(r.verdict));
        }
    };
    for (unsigned m : {5u, 7u}) {
        for (char v = 'a'; v <= 'k'; ++v) {
            run(std::string("conj-DDSs/") + v, m);
            run(std::string("conj-DDSscodes/") + v, m);
        }
    }
    run("conj-DDSsJ170", 6);
    for (unsigned m : {4u, 6u, 8u}) run("conj-DDSsJ171", m);
    for (unsigned m = 4; m <= 8; ++m) {
        for (unsigned v = 1; v <= 3; ++v) {
            std::string s = std::to_string(v);
            if (find_claim("conj-DDSs2/" + s)->applicable(m)) {
                run("conj-DDSs2/" + s, m);
                run("conj-DDSscodes2/" + s, m);
            }
        }
    }
    line(11, ok, "conjectured trinomial suite (difference sets, enumerators, dual distance) "
                 "verifies at the stated m");
    for (const auto& d : details) std::printf("      %s\n", d.c_str());
}

void criterion12() {
    bool ok = true;
    std::string notes;
    FieldSpec F6(6);
    CodeEngine eng6(F6);
    auto count6 = [&](const FamilyId& id) {
        return eng6.weight_dist_via_walsh(instantiate_bool(F6, id)).distinct_nonzero_weights();
    };
    ok = ok && count6(FamilyId::parse("helleseth")) == 5;
    elem a_ly = 0;
    for (elem c = 1; c < F6.order() && !a_ly; ++c)
        if (F6.rel_trace(c, 2) != 0) a_ly = c;
    ok = ok && count6(FamilyId{"liyue", {{"a", a_ly}}, ""}) == 2;
    elem lam = 0, mu = 0;
    for (elem l = 0; l < F6.order() && !lam; ++l)
        if ((l ^ F6.pow(l, 8)) == 1) lam = l;
    for (elem u = 1; u < F6.order() && !mu; ++u)
        if (F6.pow(u, 8) == u) mu = u;
    ok = ok && count6(FamilyId{"caohu_b", {{"lambda", lam}, {"mu", mu}}, ""}) == 5;
    unsigned ca = count6(FamilyId{"caohu_a", {{"lambda", lam}, {"mu", mu}}, ""});
    if (ca != 5)
        notes += "      finding: caohu_a yields " + std::to_string(ca) +
                 " weights at m=6 (stated 5; first seen at m=8)\n";

    ok = ok && run_claim("glynn-code-conj", 5).verdict == Verdict::Match;       // 3 weights
    ok = ok && run_claim("cherowitzo-code-conj", 5).verdict == Verdict::Match;  // at most 5

    // payne at its smallest m: the stated counts 3 and 5 both occur; shifts
    // with 4 weights exist and are surfaced as a finding, not a failure.
    FieldSpec F7(7);
    CodeEngine eng7(F7);
    auto payne = instantiate(F7, FamilyId{"payne", {{"a", 1}}, ""});
    std::map<unsigned, unsigned> hist;
    for (elem u = 1; u < F7.order(); ++u)
        ++hist[eng7.code_from_defining_set(shifted_image(F7, payne, u))
                   .distinct_nonzero_weights()];
    ok = ok && hist.count(3) && hist.count(5);
    for (auto& [nw, c] : hist)
        if (nw != 3 && nw != 5)
            notes += "      finding: payne m=7 has " + std::to_string(c) + " shifts with " +
                     std::to_string(nw) + " weights (statement says 3 or 5)\n";

    line(12, ok, "report-mode families assert their stated distinct-weight counts at the "
                 "smallest applicable m");
    std::fputs(notes.c_str(), stdout);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    std::printf("%d of 12 criteria failed\n", failures);
    return failures;
}

#include "bfc/diffsets.hpp"

#include <stdexcept>
#include <vector>

#include "bfc/boolfun.hpp"

namespace bfc {

std::string DiffSetReport::group_name() const {
    switch (group) {
    case GroupKind::Additive: return "additive";
    case GroupKind::Multiplicative: return "multiplicative";
    case GroupKind::Relative: return "relative";
    }
    return "?";
}

std::uint64_t difference_function(const DefiningSet& D, elem x) {
    std::uint64_t c = 0;
    for (elem d : D.elements())
        if (D.contains(d ^ x)) ++c;
    return c;
}

DiffSetReport is_additive_difference_set(const FieldSpec& spec, const DefiningSet& D) {
    DiffSetReport rep;
    rep.group = GroupKind::Additive;
    rep.m = spec.m();
    rep.v = spec.order();
    rep.k = D.size();
    rep.verdict = true;
    for (std::uint64_t x = 1; x < spec.order(); ++x) {
        std::uint64_t c = difference_function(D, elem(x));
        if (!rep.lambda) {
            rep.lambda = c;
        } else if (c != *rep.lambda) {
            rep.verdict = false;
            rep.counterexample = elem(x);
            rep.counterexample_count = c;
            rep.lambda.reset();
            break;
        }
    }
    return rep;
}

DiffSetReport is_multiplicative_difference_set(const FieldSpec& spec, const DefiningSet& D) {
    if (D.contains(0))
        throw std::invalid_argument("is_multiplicative_difference_set: 0 in D");
    DiffSetReport rep;
    rep.group = GroupKind::Multiplicative;
    rep.m = spec.m();
    rep.v = spec.mult_order();
    rep.k = D.size();

    const std::uint64_t N = spec.mult_order();
    std::vector<std::uint32_t> logs;
    logs.reserve(D.size());
    for (elem d : D.elements()) logs.push_back(spec.log(d));

    std::vector<std::uint64_t> cnt(N, 0);
    for (std::uint32_t l1 : logs)
        for (std::uint32_t l2 : logs)
            if (l1 != l2) ++cnt[(l1 + N - l2) % N];

    rep.verdict = true;
    for (std::uint64_t z = 1; z < N; ++z) {
        if (!rep.lambda) {
            rep.lambda = cnt[z];
        } else if (cnt[z] != *rep.lambda) {
            rep.verdict = false;
            rep.counterexample = spec.alog(z);
            rep.counterexample_count = cnt[z];
            rep.lambda.reset();
            break;
        }
    }
    return rep;
}

DiffSetReport is_relative_difference_set(const FieldSpec& spec, const DefiningSet& D,
                                         const DefiningSet& N) {
    if (N.m() != spec.m() || D.m() != spec.m())
        throw std::invalid_argument("is_relative_difference_set: field mismatch");
    if (!N.contains(0))
        throw std::invalid_argument("is_relative_difference_set: N must contain 0");
    for (elem a : N.elements())
        for (elem b : N.elements())
            if (!N.contains(a ^ b))
                throw std::invalid_argument("is_relative_difference_set: N is not a subgroup");

    DiffSetReport rep;
    rep.group = GroupKind::Relative;
    rep.m = spec.m();
    rep.v = spec.order();
    rep.k = D.size();
    rep.ell = N.size();
    rep.verdict = true;

    for (std::uint64_t x = 1; x < spec.order() && rep.verdict; ++x) {
        std::uint64_t c = difference_function(D, elem(x));
        if (N.contains(elem(x))) {
            if (c != 0) {
                rep.verdict = false;
                rep.counterexample = elem(x);
                rep.counterexample_count = c;
            }
        } else if (!rep.lambda) {
            rep.lambda = c;
        } else if (c != *rep.lambda) {
            rep.verdict = false;
            rep.counterexample = elem(x);
            rep.counterexample_count = c;
        }
    }
    if (!rep.verdict) {
        rep.lambda.reset();
        return rep;
    }

    // character cross-check: chi_b(D) = -fhat(b)/2 for b != 0 and
    // |chi_b(D)|^2 must land on n or n - lambda*ell.
    std::uint64_t n = D.size();
    std::uint64_t lam = rep.lambda.value_or(0);
    std::int64_t want_other = std::int64_t(n) - std::int64_t(lam * N.size());
    TruthTable tt = TruthTable::from_support(spec.m(), D.elements());
    WalshSpectrum ws = walsh_transform(spec, tt);
    for (std::uint64_t b = 1; b < spec.order(); ++b) {
        std::int64_t chi = -std::int64_t(ws.values[b]) / 2;
        std::int64_t sq = chi * chi;
        if (sq != std::int64_t(n) && sq != want_other) {
            rep.character_check = false;
            rep.verdict = false;
            rep.counterexample = elem(b);
            rep.counterexample_count = std::uint64_t(sq);
            break;
        }
    }
    return rep;
}

} // namespace bfc
